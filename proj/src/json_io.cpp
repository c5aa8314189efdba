#include "ncrat/json_io.hpp"

#include <fstream>
#include <sstream>

#include "ncrat/errors.hpp"

namespace ncrat {

Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat mat_from_json(const Json& j) {
    if (!j.is_array()) throw IoError("matrix JSON must be an array of rows");
    int rows = static_cast<int>(j.size());
    int cols = rows == 0 ? 0 : static_cast<int>(j[0].size());
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[static_cast<std::size_t>(i)].size()) != cols)
            throw IoError("ragged matrix JSON");
        for (int k = 0; k < cols; ++k) {
            const Json& cell = j[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            if (cell.is_number_integer())
                m.at(i, k) = rat(cell.get<long>());
            else
                m.at(i, k) = rat_from_string(cell.get<std::string>());
        }
    }
    return m;
}

Json point_to_json(const EvalPoint& z) {
    Json j;
    j["d"] = z.d;
    j["n"] = z.n;
    Json mats = Json::array();
    for (const Mat& m : z.mats) mats.push_back(mat_to_json(m));
    j["mats"] = std::move(mats);
    return j;
}

EvalPoint point_from_json(const Json& j) {
    int d = j.at("d").get<int>();
    int n = j.at("n").get<int>();
    std::vector<Mat> mats;
    for (const Json& mj : j.at("mats")) mats.push_back(mat_from_json(mj));
    return EvalPoint(d, n, std::move(mats));
}

Json multipoint_to_json(const MultiPoint& pts) {
    Json arr = Json::array();
    for (const EvalPoint& p : pts) arr.push_back(point_to_json(p));
    Json j;
    j["points"] = std::move(arr);
    return j;
}

MultiPoint multipoint_from_json(const Json& j) {
    MultiPoint pts;
    if (j.contains("points"))
        for (const Json& pj : j.at("points")) pts.push_back(point_from_json(pj));
    else
        pts.push_back(point_from_json(j));
    return pts;
}

Json realization_to_json(const FmRealization& r) {
    Json j;
    j["d"] = r.d;
    j["p"] = r.p;
    j["q"] = r.q;
    j["m"] = r.m;
    Json a = Json::array(), b = Json::array();
    for (const Mat& m : r.A) a.push_back(mat_to_json(m));
    for (const Mat& m : r.B) b.push_back(mat_to_json(m));
    j["A"] = std::move(a);
    j["B"] = std::move(b);
    j["C"] = mat_to_json(r.C);
    j["D"] = mat_to_json(r.D);
    return j;
}

FmRealization realization_from_json(const Json& j) {
    FmRealization r;
    r.d = j.at("d").get<int>();
    r.p = j.at("p").get<int>();
    r.q = j.at("q").get<int>();
    r.m = j.at("m").get<int>();
    for (const Json& mj : j.at("A")) r.A.push_back(mat_from_json(mj));
    for (const Json& mj : j.at("B")) r.B.push_back(mat_from_json(mj));
    r.C = mat_from_json(j.at("C"));
    r.D = mat_from_json(j.at("D"));
    // tolerate empty-matrix round-trips for m = 0
    if (r.m == 0) {
        for (Mat& m : r.A) m = Mat::zero(0, 0);
        for (Mat& m : r.B) m = Mat::zero(0, r.q);
        r.C = Mat::zero(r.p, 0);
    }
    r.check_shapes();
    return r;
}

Json series_to_json(const TruncSeries& s) {
    Json j;
    j["d"] = s.d;
    j["p"] = s.rows;
    j["q"] = s.cols;
    j["order"] = s.order;
    Json coeffs = Json::object();
    for (const auto& [w, c] : s.coeffs) coeffs[w.to_string()] = mat_to_json(c);
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json verdict_to_json(const Verdict& v) {
    Json j;
    j["result"] = verdict_kind_name(v.kind);
    j["exact"] = v.is_exact();
    if (!v.note.empty()) j["note"] = v.note;
    if (v.witness) j["witness"] = point_to_json(*v.witness);
    if (v.stats) {
        Json s;
        s["sizes"] = v.stats->sizes;
        s["samples_per_size"] = v.stats->samples_per_size;
        s["common_per_size"] = v.stats->common_per_size;
        s["seed"] = v.stats->seed;
        j["samples"] = std::move(s);
    }
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << contents;
    if (!out) throw IoError("write failed for " + path);
}

}  // namespace ncrat
