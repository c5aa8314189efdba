#pragma once

#include <stdexcept>
#include <string>

namespace ncrat {

/// Base class for all ncrat errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct SyntaxError : Error {
    std::size_t pos;
    std::string expected;
    SyntaxError(std::size_t pos_, const std::string& expected_, const std::string& got)
        : Error("syntax error at position " + std::to_string(pos_) + ": expected " + expected_ +
                ", got " + got),
          pos(pos_),
          expected(expected_) {}
};

struct ShapeError : Error {
    std::string path;
    ShapeError(const std::string& msg, const std::string& path_ = "")
        : Error(path_.empty() ? msg : msg + " at " + path_), path(path_) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error(msg) {}
};

/// A matrix inverse failed during evaluation: the point is outside dom.
struct NotInDomain : Error {
    std::string path;
    int n;
    NotInDomain(const std::string& path_, int n_)
        : Error("point of size " + std::to_string(n_) + " is outside the domain (inverse at " +
                (path_.empty() ? std::string("<root>") : path_) + " is singular)"),
          path(path_),
          n(n_) {}
};

/// An inverse has a singular constant term, so there is no power series at zero.
struct NotRegularAtZero : Error {
    std::string path;
    explicit NotRegularAtZero(const std::string& path_)
        : Error("expression is not regular at zero (inverse at " +
                (path_.empty() ? std::string("<root>") : path_) + " has singular constant term)"),
          path(path_) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& msg = "matrix is singular") : Error(msg) {}
};

struct SingularConstantTerm : Error {
    explicit SingularConstantTerm(const std::string& msg = "constant term is singular")
        : Error(msg) {}
};

struct InsufficientOrder : Error {
    explicit InsufficientOrder(const std::string& msg) : Error(msg) {}
};

struct RankMismatch : Error {
    explicit RankMismatch(const std::string& msg) : Error(msg) {}
};

struct NotMinimal : Error {
    explicit NotMinimal(const std::string& msg) : Error(msg) {}
};

struct GenerationFailed : Error {
    explicit GenerationFailed(const std::string& msg) : Error(msg) {}
};

/// No invertible sample point could be found for an inverse under construction.
struct DegenerateInverse : Error {
    explicit DegenerateInverse(const std::string& msg) : Error(msg) {}
};

struct IoError : Error {
    explicit IoError(const std::string& msg) : Error(msg) {}
};

}  // namespace ncrat
