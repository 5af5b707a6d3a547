#pragma once

// Periodic points of the Romik map: eigenvector construction of purely
// periodic points, exact period detection, the Galois conjugate relation,
// the w-sequence invariant and field-level exploration helpers.

#include "romik/error.hpp"
#include "romik/romik_map.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace romik {

/// A non-excluded word whose quadratic factor has a square (or
/// non-positive) discriminant. Never observed; reported as a finding.
class DegenerateWord : public Error {
public:
    using Error::Error;
};

struct PeriodicPointData {
    Word word;
    Mat3 matrix;           // M_{d1} ... M_{dk}
    CirclePoint point;     // (alpha, beta), the fixed point in the cylinder set
    QFE lambda1;           // > 1
    QFE lambda2;           // conj(lambda1) = 1 / lambda1
    int lambda3 = 1;       // det(matrix)
    Integer d;             // squarefree D with point over Q(sqrt D)
    Integer discriminant;  // (trace - det)^2 - 4
    Vec3 v1, v2, v3;       // eigenvectors for lambda1, lambda2, lambda3
};

/// Purely periodic point [overline{word}]. Rejects empty words and the
/// words 1^k, 3^k (their fixed points are rational).
PeriodicPointData construct_periodic(const Word& word);

/// True when word is nonempty and not all ones or all threes.
bool is_admissible(const Word& word);

struct ExpansionResult {
    Word preperiod;
    Word period;

    friend bool operator==(const ExpansionResult&, const ExpansionResult&) = default;
};

inline constexpr std::size_t kDefaultMaxIter = 1'000'000;

/// Eventually periodic expansion of a quadratic irrational point, found by
/// exact iteration of T and a hash set of visited points. The period is
/// primitive and the preperiod minimal. Throws InvalidArgument for rational
/// points and LimitExceeded after max_iter steps.
ExpansionResult detect_period(const CirclePoint& p, std::size_t max_iter = kDefaultMaxIter);

/// (x, y, 1) scaled into O_K^3 with no common rational-integer factor.
/// For D = 1 mod 4 half-integer coordinates are allowed.
Vec3 integralize(const CirclePoint& p);

/// w = (sqrt D / 2) (a, b, c) with integer a, b, c, if w lies in that lattice.
std::optional<std::array<Integer, 3>> lattice_coordinates(const Vec3& w, const Integer& d);

/// The closeness inequalities for a w with Q(w) = W > 0 whose coordinates
/// lie in sqrt(D) Q: w3 > 0 implies w1, w2 > -sqrt W; w3 < 0 implies
/// w1, w2 < sqrt W.
bool hyperboloid_closeness(const Vec3& w, const Rational& big_w, const Integer& d);

struct WSequence {
    Integer d;
    Vec3 w0;
    Rational big_w;                             // Q(w_n), constant
    std::vector<Vec3> terms;                    // w_0 ... w_n
    std::vector<std::array<Integer, 3>> lattice;  // w_n = (sqrt D/2)(a, b, c)
    std::vector<int> signs;                     // (-1)^{eps_n}, eps_n = #2s in d_1..d_n
    Word digits;                                // d_1 ... d_n
    std::vector<QFE> abs_x3;                    // |x3(w_n)|
    QFE max_abs_x3;
};

/// w_n = v_n x_Q conj(v_n) along the T-orbit of p, advanced by the signed
/// recurrence w_{n+1} = (-1)^{[d_{n+1} = 2]} U_{d_{n+1}} H w_n and checked
/// term by term against the direct cross product, the norm, the lattice and
/// the closeness inequalities. Throws InvalidArgument for rational points
/// and InvariantViolation if any check fails.
WSequence w_sequence(const CirclePoint& p, std::size_t n);

struct GaloisReport {
    Word word;
    CirclePoint conjugate;   // (alpha^sigma, beta^sigma)
    std::array<int, 2> expected_signs{};
    std::array<int, 2> actual_signs{};
    Word target;             // (d_{k-1}, ..., d_1, d_k)
    ExpansionResult detected;
    bool signs_ok = false;
    bool period_ok = false;

    bool passed() const { return signs_ok && period_ok; }
};

GaloisReport galois_check(const Word& word);

struct NkkResult {
    std::size_t count = 0;
    std::vector<Word> words;
};

/// Words d of length k (excluding 1^k, 3^k) whose periodic point lies over
/// Q(sqrt D), classified by the squarefree part of (trace - det)^2 - 4.
NkkResult count_nkk(unsigned k, const Integer& d);

struct TripleClass {
    Vec3 representative;
    Integer d;
    Word period;  // the rotation of the word this class expands to
};

struct RootEdge {
    std::size_t from;
    std::size_t to;
    Digit label;  // edge is the action of M_label
};

struct CircularRoot {
    Integer d;
    std::optional<FundamentalUnit> unit;  // set when normalized
    std::vector<TripleClass> classes;
    std::vector<RootEdge> edges;
};

/// Representative of v's unit class with 1 <= x3 < eps.
Vec3 normalize_class(const Vec3& v, const FundamentalUnit& eps);
bool same_class(const Vec3& u, const Vec3& v, const FundamentalUnit& eps);

/// v divided by a generator of the O_K-ideal its coordinates generate, when
/// that ideal is principal; v itself otherwise. Coordinates must lie in O_K.
Vec3 remove_content(const Vec3& v, const FundamentalUnit& eps);

/// One class per rotation of the word, class i+1 -> class i labelled M_{d_i}.
/// Normalized classes start from a coprime triple where one exists; without
/// normalization each class is the integralized point.
CircularRoot circular_root(const Word& word, bool with_unit_normalization = true);

}  // namespace romik
