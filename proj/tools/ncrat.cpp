#include <CLI11.hpp>
#include <iostream>

#include "ncrat/corpus.hpp"
#include "ncrat/decide.hpp"
#include "ncrat/diffcalc.hpp"
#include "ncrat/errors.hpp"
#include "ncrat/eval.hpp"
#include "ncrat/json_io.hpp"
#include "ncrat/parser.hpp"
#include "ncrat/realize.hpp"
#include "ncrat/selftest.hpp"
#include "ncrat/series.hpp"

namespace {

using namespace ncrat;

struct CommonFlags {
    std::uint64_t seed = 0;
    int samples = 40;
    int max_size = 3;
    int order = 6;
    std::string format = "text";
    std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--seed", flags.seed, "random seed");
    cmd->add_option("--samples", flags.samples, "samples per matrix size");
    cmd->add_option("--max-size", flags.max_size, "largest matrix size sampled");
    cmd->add_option("--order", flags.order, "series truncation order");
    cmd->add_option("--format", flags.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", flags.out, "write output to a file instead of stdout");
}

void emit(const CommonFlags& flags, const Json& payload, const std::string& text) {
    std::string body = flags.format == "json" ? payload.dump(2) + "\n" : text;
    if (flags.out.empty())
        std::cout << body;
    else
        write_text_file(flags.out, body);
}

ExprFile load_expr(const std::string& path) { return parse_expr_file(read_text_file(path)); }

DecidePolicy policy_from(const CommonFlags& flags) {
    DecidePolicy policy;
    policy.seed = flags.seed;
    policy.samples_per_size = flags.samples;
    policy.max_size = flags.max_size;
    return policy;
}

int verdict_exit(const Verdict& v) { return v.is_exact() ? 0 : 2; }

std::string verdict_text(const Verdict& v) {
    std::string s = verdict_kind_name(v.kind);
    if (!v.note.empty()) s += " (" + v.note + ")";
    s += "\n";
    if (v.witness) s += "witness: " + point_to_json(*v.witness).dump() + "\n";
    if (v.stats) {
        s += "sampled sizes:";
        for (std::size_t k = 0; k < v.stats->sizes.size(); ++k)
            s += " " + std::to_string(v.stats->sizes[k]) + " (" +
                 std::to_string(v.stats->common_per_size[k]) + " in-domain)";
        s += ", seed " + std::to_string(v.stats->seed) + "\n";
    }
    return s;
}

std::vector<Mat> directions_from_json(const Json& j, int d) {
    std::vector<Mat> w;
    if (j.is_array() && !j.empty() && j[0].is_array() && !j[0].empty() && j[0][0].is_array()) {
        for (const Json& mj : j) w.push_back(mat_from_json(mj));
    } else {
        w.push_back(mat_from_json(j));
    }
    if (static_cast<int>(w.size()) != d)
        throw IoError("expected " + std::to_string(d) + " direction matrices");
    return w;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"noncommutative rational function engine"};
    app.require_subcommand(1);

    CommonFlags flags;

    std::string expr_path, expr_b_path, point_path, zp_path, w_path, in_path;
    int letter = 1;
    bool multi = false;
    std::string side = "right";
    int bound = 0;

    auto* cmd_parse = app.add_subcommand("parse", "parse an expression file and echo it");
    cmd_parse->add_option("--expr", expr_path, "expression file")->required();
    add_common(cmd_parse, flags);

    auto* cmd_eval = app.add_subcommand("eval", "evaluate at a point (or tuple of points)");
    cmd_eval->add_option("--expr", expr_path)->required();
    cmd_eval->add_option("--point", point_path, "point JSON file")->required();
    cmd_eval->add_flag("--multi", multi, "point file holds one point per tuple slot");
    add_common(cmd_eval, flags);

    auto* cmd_series = app.add_subcommand("series", "power series expansion at zero");
    cmd_series->add_option("--expr", expr_path)->required();
    add_common(cmd_series, flags);

    auto* cmd_realize = app.add_subcommand("realize", "state-space realization of an expression");
    cmd_realize->add_option("--in", in_path, "expression file")->required();
    add_common(cmd_realize, flags);

    auto* cmd_minimize = app.add_subcommand("minimize", "reduce a realization");
    cmd_minimize->add_option("--in", in_path, "realization JSON file")->required();
    add_common(cmd_minimize, flags);

    auto* cmd_transfer = app.add_subcommand("transfer", "transfer function of a realization");
    cmd_transfer->add_option("--in", in_path, "realization JSON file")->required();
    add_common(cmd_transfer, flags);

    auto* cmd_equiv = app.add_subcommand("equiv", "decide equivalence of two expressions");
    cmd_equiv->add_option("--a", expr_path)->required();
    cmd_equiv->add_option("--b", expr_b_path)->required();
    add_common(cmd_equiv, flags);

    auto* cmd_zero = app.add_subcommand("zero", "decide whether an expression is zero");
    cmd_zero->add_option("--expr", expr_path)->required();
    add_common(cmd_zero, flags);

    auto* cmd_diff = app.add_subcommand("diff", "difference-differential operator");
    cmd_diff->add_option("--expr", expr_path)->required();
    cmd_diff->add_option("--letter", letter, "letter j in 1..d")->required();
    bool symbolic = false, numeric = false;
    cmd_diff->add_flag("--symbolic", symbolic, "print the symbolic two-tuple expression");
    cmd_diff->add_flag("--numeric", numeric, "contract against directions at (Z, Z')");
    cmd_diff->add_option("--Z", point_path, "point JSON");
    cmd_diff->add_option("--Zp", zp_path, "second point JSON");
    cmd_diff->add_option("--W", w_path, "direction matrices JSON");
    add_common(cmd_diff, flags);

    auto* cmd_shift = app.add_subcommand("shift", "backward shift of an expression");
    cmd_shift->add_option("--expr", expr_path)->required();
    cmd_shift->add_option("--side", side, "left|right")->check(CLI::IsMember({"left", "right"}));
    cmd_shift->add_option("--letter", letter)->required();
    add_common(cmd_shift, flags);

    auto* cmd_dderiv = app.add_subcommand("dderiv", "directional derivative");
    cmd_dderiv->add_option("--expr", expr_path)->required();
    cmd_dderiv->add_option("--Z", point_path)->required();
    cmd_dderiv->add_option("--W", w_path)->required();
    add_common(cmd_dderiv, flags);

    auto* cmd_hessian = app.add_subcommand("hessian", "second-order directional derivative");
    cmd_hessian->add_option("--expr", expr_path)->required();
    cmd_hessian->add_option("--Z", point_path)->required();
    cmd_hessian->add_option("--W", w_path)->required();
    add_common(cmd_hessian, flags);

    auto* cmd_domain = app.add_subcommand("domain-check", "pencil singularity test");
    cmd_domain->add_option("--in", in_path, "realization JSON file")->required();
    cmd_domain->add_option("--point", point_path)->required();
    add_common(cmd_domain, flags);

    auto* cmd_selftest = app.add_subcommand("selftest", "run the acceptance suite");
    add_common(cmd_selftest, flags);

    auto* cmd_hankel = app.add_subcommand("hankel", "minimal realization from series data");
    cmd_hankel->add_option("--expr", expr_path)->required();
    cmd_hankel->add_option("--bound", bound, "state dimension bound")->required();
    add_common(cmd_hankel, flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_parse->parsed()) {
            ExprFile f = load_expr(expr_path);
            Json j;
            j["d"] = f.d;
            j["rows"] = f.expr.rows();
            j["cols"] = f.expr.cols();
            j["expr"] = format(f.expr);
            emit(flags, j, format(f.expr) + "\n");
            return 0;
        }
        if (cmd_eval->parsed()) {
            ExprFile f = load_expr(expr_path);
            Json pj = Json::parse(read_text_file(point_path));
            try {
                Mat value;
                if (multi) {
                    MultiPoint pts = multipoint_from_json(pj);
                    value = evaluate_multi(f.expr, pts).data;
                } else {
                    value = evaluate(f.expr, point_from_json(pj));
                }
                emit(flags, mat_to_json(value), value.to_string() + "\n");
                return 0;
            } catch (const NotInDomain& ex) {
                Json j;
                j["error"] = "NotInDomain";
                j["path"] = ex.path;
                j["size"] = ex.n;
                emit(flags, j, std::string("NotInDomain: ") + ex.what() + "\n");
                return 1;
            }
        }
        if (cmd_series->parsed()) {
            ExprFile f = load_expr(expr_path);
            TruncSeries s = expand(f.expr, flags.order);
            std::string text;
            for (const auto& [w, c] : s.coeffs)
                text += (w.is_empty() ? std::string("e") : w.to_string()) + ": " + c.to_string() +
                        "\n";
            emit(flags, series_to_json(s), text);
            return 0;
        }
        if (cmd_realize->parsed()) {
            ExprFile f = load_expr(in_path);
            FmRealization r = realize(f.expr);
            emit(flags, realization_to_json(r),
                 realization_to_json(r).dump(2) + "\n");
            return 0;
        }
        if (cmd_minimize->parsed()) {
            FmRealization r = realization_from_json(Json::parse(read_text_file(in_path)));
            FmRealization mini = minimize(r);
            emit(flags, realization_to_json(mini), realization_to_json(mini).dump(2) + "\n");
            return 0;
        }
        if (cmd_transfer->parsed()) {
            FmRealization r = realization_from_json(Json::parse(read_text_file(in_path)));
            RatExpr e = transfer_expr(r);
            Json j;
            j["d"] = r.d;
            j["expr"] = format(e);
            emit(flags, j, format_expr_file(e));
            return 0;
        }
        if (cmd_equiv->parsed()) {
            ExprFile a = load_expr(expr_path), b = load_expr(expr_b_path);
            Verdict v = equivalent(a.expr, b.expr, policy_from(flags));
            emit(flags, verdict_to_json(v), verdict_text(v));
            return verdict_exit(v);
        }
        if (cmd_zero->parsed()) {
            ExprFile f = load_expr(expr_path);
            Verdict v = is_zero(f.expr, policy_from(flags));
            emit(flags, verdict_to_json(v), verdict_text(v));
            return verdict_exit(v);
        }
        if (cmd_diff->parsed()) {
            ExprFile f = load_expr(expr_path);
            if (numeric) {
                if (point_path.empty() || zp_path.empty() || w_path.empty())
                    throw IoError("--numeric needs --Z, --Zp and --W");
                EvalPoint z = point_from_json(Json::parse(read_text_file(point_path)));
                EvalPoint zp = point_from_json(Json::parse(read_text_file(zp_path)));
                Json wj = Json::parse(read_text_file(w_path));
                std::vector<Mat> w;
                if (wj.is_array() && !wj.empty() && wj[0].is_array() && !wj[0].empty() &&
                    wj[0][0].is_array()) {
                    w = directions_from_json(wj, f.d);
                } else {
                    // one direction matrix: it drives letter j, the rest are zero
                    Mat wl = mat_from_json(wj);
                    w.assign(static_cast<std::size_t>(f.d), Mat::zero(wl.rows(), wl.cols()));
                    w[static_cast<std::size_t>(letter - 1)] = wl;
                }
                Mat value = delta_numeric(f.expr, z, zp, w);
                emit(flags, mat_to_json(value), value.to_string() + "\n");
                return 0;
            }
            RatExpr de = delta(f.expr, letter);
            Json j;
            j["d"] = f.d;
            j["arity"] = de.arity();
            j["expr"] = format(de);
            emit(flags, j, format(de) + "\n");
            return 0;
        }
        if (cmd_shift->parsed()) {
            ExprFile f = load_expr(expr_path);
            RatExpr shifted =
                side == "right" ? right_shift(f.expr, letter) : left_shift(f.expr, letter);
            Json j;
            j["d"] = f.d;
            j["expr"] = format(shifted);
            emit(flags, j, format_expr_file(shifted));
            return 0;
        }
        if (cmd_dderiv->parsed() || cmd_hessian->parsed()) {
            ExprFile f = load_expr(expr_path);
            EvalPoint z = point_from_json(Json::parse(read_text_file(point_path)));
            std::vector<Mat> w = directions_from_json(Json::parse(read_text_file(w_path)), f.d);
            Mat value = cmd_dderiv->parsed() ? directional_derivative(f.expr, z, w)
                                             : hessian(f.expr, z, w);
            emit(flags, mat_to_json(value), value.to_string() + "\n");
            return 0;
        }
        if (cmd_domain->parsed()) {
            FmRealization r = realization_from_json(Json::parse(read_text_file(in_path)));
            EvalPoint z = point_from_json(Json::parse(read_text_file(point_path)));
            bool ok = pencil_domain_check(r, z);
            Json j;
            j["regular"] = ok;
            emit(flags, j, std::string(ok ? "regular" : "singular") + "\n");
            return 0;
        }
        if (cmd_hankel->parsed()) {
            ExprFile f = load_expr(expr_path);
            FmRealization r = hankel_realize(expand(f.expr, 2 * bound + 1), bound);
            emit(flags, realization_to_json(r), realization_to_json(r).dump(2) + "\n");
            return 0;
        }
        if (cmd_selftest->parsed()) {
            auto results = ncrat::selftest::run_acceptance(&std::cout);
            bool ok = ncrat::selftest::all_passed(results);
            std::cout << (ok ? "all criteria passed" : "FAILURES present") << std::endl;
            return ok ? 0 : 1;
        }
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << std::endl;
        return 1;
    } catch (const Json::exception& ex) {
        std::cerr << "error: malformed JSON input: " << ex.what() << std::endl;
        return 1;
    }
    return 1;
}
