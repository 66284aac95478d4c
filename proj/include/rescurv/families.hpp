#pragma once

#include <string>
#include <vector>

#include "rescurv/graph.hpp"

namespace rescurv {

enum class FamilyKind { Complete, Cycle, Path, Hypercube, Torus, Petersen, Wagner, Antiprism };

struct FamilySpec {
    FamilyKind kind;
    int n = 0; // size parameter; unused for petersen/wagner
    int d = 0; // torus dimension
};

/// Builds a spec from CLI-style tokens ("cycle", {8}); validates parameter
/// ranges. Throws BadParamsError.
FamilySpec family_spec(const std::string& kind, const std::vector<int>& params);

/// Canonical labeled instance. Hypercube labels are bitstrings, torus labels
/// are comma-joined coordinates, everything else uses decimal indices.
Graph generate(const FamilySpec& spec);

/// Exact rational with 64-bit terms; wide enough for every closed form the
/// oracle produces (complete n <= 100, cycle n <= 200, hypercube n <= 9).
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d);

    Rational operator+(const Rational& o) const;
    Rational reciprocal() const;
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct CurvatureOracle {
    bool exact = false;
    Rational value;          // set when exact
    std::string asymptotic;  // set for torus: the Theta growth law
};

/// Closed-form constant curvature: complete n/(2n-2), cycle 6/(n^2-1),
/// hypercube 1 / sum_{k=1..n} C(n,k)/k. Torus returns the Theta descriptor
/// only. Throws NoClosedFormError for path/petersen/wagner/antiprism.
CurvatureOracle oracle_curvature(const FamilySpec& spec);

} // namespace rescurv
