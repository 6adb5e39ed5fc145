#ifndef KOPPEL_MULTIPOLY_HPP
#define KOPPEL_MULTIPOLY_HPP

#include "koppel/gaussian_rational.hpp"

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace koppel {

/// Variable families on the cone over P^N x P^N plus the Hefer auxiliaries w
/// and the transcendental unit carrying powers of 2*pi*i.
enum class Family : int { Zeta = 0, ZetaBar = 1, Z = 2, ZBar = 3, W = 4 };

/// Fixed variable universe for one session (N given once).
struct VarSpace {
    int N = 0;

    VarSpace() = default;
    explicit VarSpace(int n) : N(n) {}

    int per() const { return N + 1; }
    int nvars() const { return 5 * (N + 1) + 1; }
    int id(Family f, int j) const { return static_cast<int>(f) * (N + 1) + j; }
    int pi_unit() const { return 5 * (N + 1); }
    bool is_pi(int v) const { return v == pi_unit(); }
    Family family_of(int v) const { return static_cast<Family>(v / (N + 1)); }
    int index_of(int v) const { return v % (N + 1); }
    std::string name(int v) const;

    bool operator==(const VarSpace& o) const { return N == o.N; }
};

using Exps = std::vector<int32_t>;

/// Point assignment for numeric evaluation: one complex value per variable.
/// The 2*pi*i unit defaults to 2*pi*i.
struct Point {
    std::vector<std::complex<double>> vals;

    static Point make(const VarSpace& vs);
    void set(const VarSpace& vs, Family f, int j, std::complex<double> v) {
        vals[vs.id(f, j)] = v;
    }
    /// Set the N+1 coordinates of one family at once.
    void set_vec(const VarSpace& vs, Family f, const std::vector<std::complex<double>>& v);
    /// Set a family and its conjugate family consistently.
    void set_conj_pair(const VarSpace& vs, Family hol, const std::vector<std::complex<double>>& v);
};

/// Exact multivariate polynomial with Gaussian-rational coefficients.
/// Terms are kept in canonical (lexicographic exponent) order; no zero
/// coefficients are stored.
class MultiPoly {
  public:
    VarSpace vs;
    std::map<Exps, GaussianRational> terms;

    MultiPoly() = default;
    explicit MultiPoly(VarSpace v) : vs(v) {}

    static MultiPoly zero(const VarSpace& vs) { return MultiPoly(vs); }
    static MultiPoly constant(const VarSpace& vs, GaussianRational c);
    static MultiPoly var(const VarSpace& vs, Family f, int j, int exp = 1);
    static MultiPoly var_id(const VarSpace& vs, int id, int exp = 1);
    static MultiPoly pi2i(const VarSpace& vs, int exp = 1);

    bool is_zero() const { return terms.empty(); }
    bool is_constant() const;
    GaussianRational constant_value() const;

    void add_term(const Exps& e, const GaussianRational& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const GaussianRational& c) const;
    MultiPoly& operator+=(const MultiPoly& o);

    bool operator==(const MultiPoly& o) const { return terms == o.terms; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }
    bool operator<(const MultiPoly& o) const;

    /// Formal conjugation: zeta <-> zetabar, z <-> zbar, coefficients
    /// conjugated; the 2*pi*i unit picks up (-1)^exponent. w is fixed.
    MultiPoly conj() const;

    MultiPoly derivative(int var) const;

    /// Degree in the given family (max over terms), or homogeneous weight.
    std::optional<long> homogeneous_weight(Family f) const;
    /// (holomorphic, antiholomorphic) weight pair for the combined C* action
    /// on the zeta side (hol = Zeta + W here never mixes) or z side.
    std::optional<std::pair<long, long>> combined_weight(bool zeta_side) const;

    long total_degree() const;
    long degree_in(int var) const;

    std::complex<double> eval(const Point& p) const;
    /// Exact evaluation; requires the polynomial to be free of the 2*pi*i unit.
    GaussianRational eval_exact(const std::vector<GaussianRational>& point) const;

    MultiPoly substitute(const std::map<int, MultiPoly>& bindings) const;
    /// Rename variables wholesale: from family -> to family, same index.
    MultiPoly remap_family(Family from, Family to) const;

    /// Exact division by a divisor linear in variable `var` (divisor = a*var + b
    /// with a, b free of var). Throws if the division is not exact.
    MultiPoly divide_exact_linear(const MultiPoly& divisor, int var) const;

    /// Pseudo-remainder of *this by f with respect to variable `var`
    /// (f viewed as a polynomial in `var`). Zero iff lc(f)^k * this is in (f).
    MultiPoly pseudo_remainder(const MultiPoly& f, int var) const;

    std::string str() const;
};

MultiPoly operator*(const GaussianRational& c, const MultiPoly& p);

/// Exact rational function; equality by cross-multiplication, no gcd
/// normalization. A common monomial content between numerator and denominator
/// is cancelled to keep growth down.
class RationalFn {
  public:
    MultiPoly num, den;

    RationalFn() = default;
    explicit RationalFn(MultiPoly n);
    RationalFn(MultiPoly n, MultiPoly d);

    static RationalFn zero(const VarSpace& vs) { return RationalFn(MultiPoly::zero(vs)); }
    static RationalFn one(const VarSpace& vs) {
        return RationalFn(MultiPoly::constant(vs, GaussianRational(1)));
    }

    const VarSpace& space() const { return num.vs; }
    bool is_zero() const { return num.is_zero(); }

    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    RationalFn operator-() const;
    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator*(const GaussianRational& c) const;
    RationalFn operator/(const RationalFn& o) const;
    RationalFn& operator+=(const RationalFn& o);

    bool equals(const RationalFn& o) const;

    RationalFn conj() const;
    RationalFn derivative(int var) const;
    RationalFn substitute(const std::map<int, MultiPoly>& bindings) const;
    RationalFn substitute_rational(const std::map<int, RationalFn>& bindings) const;

    std::optional<std::pair<long, long>> combined_weight(bool zeta_side) const;

    std::complex<double> eval(const Point& p, double pole_floor = 1e-300) const;

    std::string str() const;

  private:
    void normalize();
};

/// Sum a list of rational functions, grouping equal denominators first.
RationalFn sum_rationals(const VarSpace& vs, std::vector<RationalFn> parts);

/// |v|^2 = sum_j v_j vbar_j for the (hol, antihol) pair of families.
MultiPoly norm_sq(const VarSpace& vs, Family hol);
/// a . bbar-style pairing sum_j p_j q_j over two families.
MultiPoly dot(const VarSpace& vs, Family a, Family b);

} // namespace koppel

#endif
