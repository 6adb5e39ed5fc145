#include "koppel/multipoly.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <sstream>

namespace koppel {

std::string VarSpace::name(int v) const {
    if (is_pi(v)) return "tpi";
    static const char* prefix[] = {"zeta", "zetab", "z", "zb", "w"};
    return std::string(prefix[static_cast<int>(family_of(v))]) + std::to_string(index_of(v));
}

Point Point::make(const VarSpace& vs) {
    Point p;
    p.vals.assign(vs.nvars(), {0.0, 0.0});
    p.vals[vs.pi_unit()] = {0.0, 2.0 * M_PI};
    return p;
}

void Point::set_vec(const VarSpace& vs, Family f, const std::vector<std::complex<double>>& v) {
    for (int j = 0; j <= vs.N; ++j) vals[vs.id(f, j)] = v[j];
}

void Point::set_conj_pair(const VarSpace& vs, Family hol, const std::vector<std::complex<double>>& v) {
    Family bar = hol == Family::Zeta ? Family::ZetaBar : Family::ZBar;
    for (int j = 0; j <= vs.N; ++j) {
        vals[vs.id(hol, j)] = v[j];
        vals[vs.id(bar, j)] = std::conj(v[j]);
    }
}

MultiPoly MultiPoly::constant(const VarSpace& vs, GaussianRational c) {
    MultiPoly p(vs);
    if (!c.is_zero()) p.terms.emplace(Exps(vs.nvars(), 0), std::move(c));
    return p;
}

MultiPoly MultiPoly::var(const VarSpace& vs, Family f, int j, int exp) {
    return var_id(vs, vs.id(f, j), exp);
}

MultiPoly MultiPoly::var_id(const VarSpace& vs, int id, int exp) {
    MultiPoly p(vs);
    Exps e(vs.nvars(), 0);
    e[id] = exp;
    p.terms.emplace(std::move(e), GaussianRational(1));
    return p;
}

MultiPoly MultiPoly::pi2i(const VarSpace& vs, int exp) { return var_id(vs, vs.pi_unit(), exp); }

bool MultiPoly::is_constant() const {
    if (terms.empty()) return true;
    if (terms.size() > 1) return false;
    const Exps& e = terms.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
}

GaussianRational MultiPoly::constant_value() const {
    if (terms.empty()) return GaussianRational(0);
    assert(is_constant());
    return terms.begin()->second;
}

void MultiPoly::add_term(const Exps& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms) add_term(e, c);
    return *this;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(vs);
    for (const auto& [e, c] : terms) r.terms.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(vs);
    const int nv = vs.nvars();
    Exps buf(nv);
    for (const auto& [ea, ca] : terms) {
        for (const auto& [eb, cb] : o.terms) {
            for (int i = 0; i < nv; ++i) buf[i] = ea[i] + eb[i];
            r.add_term(buf, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::operator*(const GaussianRational& c) const {
    MultiPoly r(vs);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms) r.terms.emplace(e, k * c);
    return r;
}

MultiPoly operator*(const GaussianRational& c, const MultiPoly& p) { return p * c; }

bool MultiPoly::operator<(const MultiPoly& o) const {
    return std::lexicographical_compare(
        terms.begin(), terms.end(), o.terms.begin(), o.terms.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first < b.first;
            if (a.second.re != b.second.re) return a.second.re < b.second.re;
            return a.second.im < b.second.im;
        });
}

MultiPoly MultiPoly::conj() const {
    MultiPoly r(vs);
    const int per = vs.per();
    for (const auto& [e, c] : terms) {
        Exps f(e);
        for (int j = 0; j < per; ++j) {
            std::swap(f[vs.id(Family::Zeta, j)], f[vs.id(Family::ZetaBar, j)]);
            std::swap(f[vs.id(Family::Z, j)], f[vs.id(Family::ZBar, j)]);
        }
        GaussianRational cc = c.conj();
        if (e[vs.pi_unit()] % 2 != 0) cc = -cc; // conj(2*pi*i) = -(2*pi*i)
        r.add_term(f, cc);
    }
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(vs);
    for (const auto& [e, c] : terms) {
        if (e[var] == 0) continue;
        Exps f(e);
        f[var] -= 1;
        r.add_term(f, c * GaussianRational(static_cast<long>(e[var])));
    }
    return r;
}

std::optional<long> MultiPoly::homogeneous_weight(Family f) const {
    std::optional<long> w;
    const int base = static_cast<int>(f) * vs.per();
    for (const auto& [e, c] : terms) {
        long d = 0;
        for (int j = 0; j < vs.per(); ++j) d += e[base + j];
        if (!w) w = d;
        else if (*w != d) return std::nullopt;
    }
    return w;
}

std::optional<std::pair<long, long>> MultiPoly::combined_weight(bool zeta_side) const {
    Family hol = zeta_side ? Family::Zeta : Family::Z;
    Family bar = zeta_side ? Family::ZetaBar : Family::ZBar;
    std::optional<std::pair<long, long>> w;
    for (const auto& [e, c] : terms) {
        long dh = 0, db = 0;
        for (int j = 0; j < vs.per(); ++j) {
            dh += e[vs.id(hol, j)];
            db += e[vs.id(bar, j)];
        }
        if (!w) w = std::make_pair(dh, db);
        else if (*w != std::make_pair(dh, db)) return std::nullopt;
    }
    return w;
}

long MultiPoly::total_degree() const {
    long d = 0;
    for (const auto& [e, c] : terms) {
        long t = 0;
        for (int i = 0; i < vs.nvars(); ++i)
            if (!vs.is_pi(i)) t += e[i];
        d = std::max(d, t);
    }
    return d;
}

long MultiPoly::degree_in(int var) const {
    long d = 0;
    for (const auto& [e, c] : terms) d = std::max<long>(d, e[var]);
    return d;
}

std::complex<double> MultiPoly::eval(const Point& p) const {
    std::complex<double> acc = 0.0;
    for (const auto& [e, c] : terms) {
        std::complex<double> t = c.to_complex();
        for (int i = 0; i < vs.nvars(); ++i) {
            for (int k = 0; k < e[i]; ++k) t *= p.vals[i];
        }
        acc += t;
    }
    return acc;
}

GaussianRational MultiPoly::eval_exact(const std::vector<GaussianRational>& point) const {
    GaussianRational acc(0);
    for (const auto& [e, c] : terms) {
        if (e[vs.pi_unit()] != 0)
            throw std::runtime_error("eval_exact: expression carries 2*pi*i factors");
        GaussianRational t = c;
        for (int i = 0; i < vs.nvars(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(const std::map<int, MultiPoly>& bindings) const {
    MultiPoly r(vs);
    std::map<std::pair<int, int>, MultiPoly> powcache;
    auto power = [&](int var, int exp) -> const MultiPoly& {
        auto key = std::make_pair(var, exp);
        auto it = powcache.find(key);
        if (it != powcache.end()) return it->second;
        const MultiPoly& base = bindings.at(var);
        MultiPoly p = exp == 1 ? base : MultiPoly::constant(vs, GaussianRational(1));
        for (int k = exp == 1 ? 1 : 0; k < exp; ++k) p = p * base;
        return powcache.emplace(key, std::move(p)).first->second;
    };
    for (const auto& [e, c] : terms) {
        MultiPoly t = MultiPoly::constant(vs, c);
        Exps rest(vs.nvars(), 0);
        for (int i = 0; i < vs.nvars(); ++i) {
            if (e[i] == 0) continue;
            if (bindings.count(i)) t = t * power(i, e[i]);
            else rest[i] = e[i];
        }
        MultiPoly mono(vs);
        mono.terms.emplace(std::move(rest), GaussianRational(1));
        r += t * mono;
    }
    return r;
}

MultiPoly MultiPoly::remap_family(Family from, Family to) const {
    MultiPoly r(vs);
    for (const auto& [e, c] : terms) {
        Exps f(e);
        for (int j = 0; j < vs.per(); ++j) {
            int a = vs.id(from, j), b = vs.id(to, j);
            f[b] += f[a];
            f[a] = 0;
        }
        r.add_term(f, c);
    }
    return r;
}

namespace {
// Split p as a univariate polynomial in `var` with MultiPoly coefficients.
std::map<long, MultiPoly> univariate_split(const MultiPoly& p, int var) {
    std::map<long, MultiPoly> out;
    for (const auto& [e, c] : p.terms) {
        Exps f(e);
        long d = f[var];
        f[var] = 0;
        auto it = out.find(d);
        if (it == out.end()) it = out.emplace(d, MultiPoly(p.vs)).first;
        it->second.add_term(f, c);
    }
    return out;
}
} // namespace

MultiPoly MultiPoly::divide_exact_linear(const MultiPoly& divisor, int var) const {
    auto dv = univariate_split(divisor, var);
    if (dv.rbegin()->first != 1 || !dv.at(1).is_constant())
        throw std::runtime_error("divide_exact_linear: divisor not monic-linear in variable");
    GaussianRational a = dv.at(1).constant_value();
    MultiPoly b = dv.count(0) ? dv.at(0) : MultiPoly::zero(vs);

    auto pv = univariate_split(*this, var);
    long deg = pv.empty() ? 0 : pv.rbegin()->first;
    // synthetic division: q_k = (p_{k+1} - b*q_{k+1})/a descending
    std::map<long, MultiPoly> q;
    MultiPoly carry = MultiPoly::zero(vs);
    MultiPoly rem = MultiPoly::zero(vs);
    for (long k = deg; k >= 0; --k) {
        MultiPoly pk = pv.count(k) ? pv.at(k) : MultiPoly::zero(vs);
        MultiPoly cur = pk + carry;
        if (k == 0) {
            rem = cur;
            break;
        }
        MultiPoly qk = cur * (GaussianRational(1) / a);
        q.emplace(k - 1, qk);
        carry = -(b * qk);
    }
    if (!rem.is_zero()) throw std::runtime_error("divide_exact_linear: division not exact");
    MultiPoly result(vs);
    for (auto& [k, coeff] : q)
        result += coeff * MultiPoly::var_id(vs, var, static_cast<int>(k));
    return result;
}

MultiPoly MultiPoly::pseudo_remainder(const MultiPoly& f, int var) const {
    auto fv = univariate_split(f, var);
    if (fv.empty()) throw std::runtime_error("pseudo_remainder: zero divisor");
    long df = fv.rbegin()->first;
    MultiPoly lc = fv.at(df);
    MultiPoly p = *this;
    long dp = p.degree_in(var);
    while (!p.is_zero() && (dp = p.degree_in(var)) >= df && dp > 0) {
        auto pv = univariate_split(p, var);
        MultiPoly lp = pv.at(dp);
        MultiPoly shift = MultiPoly::var_id(vs, var, static_cast<int>(dp - df));
        p = lc * p - lp * shift * f;
        if (p.degree_in(var) == dp) throw std::runtime_error("pseudo_remainder: no progress");
    }
    return p;
}

std::string MultiPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (int i = 0; i < vs.nvars(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << vs.name(i);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------

RationalFn::RationalFn(MultiPoly n) : num(std::move(n)), den(MultiPoly::constant(num.vs, GaussianRational(1))) {
    normalize();
}

RationalFn::RationalFn(MultiPoly n, MultiPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::runtime_error("RationalFn: zero denominator");
    normalize();
}

void RationalFn::normalize() {
    if (num.is_zero()) {
        den = MultiPoly::constant(num.vs, GaussianRational(1));
        return;
    }
    // cancel common monomial content between numerator and denominator
    const int nv = num.vs.nvars();
    Exps cn(nv, INT32_MAX), cd(nv, INT32_MAX);
    for (const auto& [e, c] : num.terms)
        for (int i = 0; i < nv; ++i) cn[i] = std::min(cn[i], e[i]);
    for (const auto& [e, c] : den.terms)
        for (int i = 0; i < nv; ++i) cd[i] = std::min(cd[i], e[i]);
    Exps common(nv);
    bool any = false;
    for (int i = 0; i < nv; ++i) {
        common[i] = std::min(cn[i], cd[i]);
        if (common[i] > 0) any = true;
    }
    if (!any) return;
    auto strip = [&](MultiPoly& p) {
        MultiPoly out(p.vs);
        for (const auto& [e, c] : p.terms) {
            Exps f(e);
            for (int i = 0; i < nv; ++i) f[i] -= common[i];
            out.terms.emplace(std::move(f), c);
        }
        p = std::move(out);
    };
    strip(num);
    strip(den);
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den == o.den) return RationalFn(num + o.num, den);
    return RationalFn(num * o.den + o.num * den, den * o.den);
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
    *this = *this + o;
    return *this;
}

RationalFn RationalFn::operator-(const RationalFn& o) const {
    if (o.is_zero()) return *this;
    if (den == o.den) return RationalFn(num - o.num, den);
    return RationalFn(num * o.den - o.num * den, den * o.den);
}

RationalFn RationalFn::operator-() const {
    RationalFn r = *this;
    r.num = -r.num;
    return r;
}

RationalFn RationalFn::operator*(const RationalFn& o) const {
    if (is_zero() || o.is_zero()) return zero(space());
    return RationalFn(num * o.num, den * o.den);
}

RationalFn RationalFn::operator*(const GaussianRational& c) const {
    if (c.is_zero()) return zero(space());
    RationalFn r = *this;
    r.num = r.num * c;
    return r;
}

RationalFn RationalFn::operator/(const RationalFn& o) const {
    if (o.is_zero()) throw std::runtime_error("RationalFn: division by zero");
    if (is_zero()) return zero(space());
    return RationalFn(num * o.den, den * o.num);
}

bool RationalFn::equals(const RationalFn& o) const {
    return (num * o.den - o.num * den).is_zero();
}

RationalFn RationalFn::conj() const { return RationalFn(num.conj(), den.conj()); }

RationalFn RationalFn::derivative(int var) const {
    bool den_const = den.degree_in(var) == 0;
    if (den_const) return RationalFn(num.derivative(var), den);
    return RationalFn(num.derivative(var) * den - num * den.derivative(var), den * den);
}

RationalFn RationalFn::substitute(const std::map<int, MultiPoly>& bindings) const {
    MultiPoly d = den.substitute(bindings);
    if (d.is_zero()) throw std::runtime_error("denominator vanishes identically");
    return RationalFn(num.substitute(bindings), d);
}

RationalFn RationalFn::substitute_rational(const std::map<int, RationalFn>& bindings) const {
    const VarSpace& vs = space();
    auto apply = [&](const MultiPoly& p) -> RationalFn {
        std::vector<RationalFn> parts;
        std::map<std::pair<int, int>, RationalFn> powcache;
        std::function<const RationalFn&(int, int)> power = [&](int var, int exp) -> const RationalFn& {
            auto key = std::make_pair(var, exp);
            auto it = powcache.find(key);
            if (it != powcache.end()) return it->second;
            RationalFn r = bindings.at(var);
            for (int k = 1; k < exp; ++k) r = r * bindings.at(var);
            return powcache.emplace(key, std::move(r)).first->second;
        };
        for (const auto& [e, c] : p.terms) {
            RationalFn t(MultiPoly::constant(vs, c));
            Exps rest(vs.nvars(), 0);
            for (int i = 0; i < vs.nvars(); ++i) {
                if (e[i] == 0) continue;
                if (bindings.count(i)) t = t * power(i, e[i]);
                else rest[i] = e[i];
            }
            MultiPoly mono(vs);
            mono.terms.emplace(std::move(rest), GaussianRational(1));
            parts.push_back(t * RationalFn(mono));
        }
        return sum_rationals(vs, std::move(parts));
    };
    RationalFn n = apply(num), d = apply(den);
    if (d.is_zero()) throw std::runtime_error("denominator vanishes identically");
    return n / d;
}

std::optional<std::pair<long, long>> RationalFn::combined_weight(bool zeta_side) const {
    if (is_zero()) return std::make_pair(0L, 0L);
    auto a = num.combined_weight(zeta_side), b = den.combined_weight(zeta_side);
    if (!a || !b) return std::nullopt;
    return std::make_pair(a->first - b->first, a->second - b->second);
}

std::complex<double> RationalFn::eval(const Point& p, double pole_floor) const {
    std::complex<double> d = den.eval(p);
    if (std::abs(d) < pole_floor) throw std::runtime_error("evaluation at pole");
    return num.eval(p) / d;
}

std::string RationalFn::str() const {
    if (den.is_constant() && den.constant_value().is_one()) return num.str();
    return "(" + num.str() + ") / (" + den.str() + ")";
}

RationalFn sum_rationals(const VarSpace& vs, std::vector<RationalFn> parts) {
    std::map<MultiPoly, MultiPoly> by_den; // den -> accumulated num
    for (auto& r : parts) {
        if (r.is_zero()) continue;
        auto it = by_den.find(r.den);
        if (it == by_den.end()) by_den.emplace(std::move(r.den), std::move(r.num));
        else it->second += r.num;
    }
    RationalFn acc = RationalFn::zero(vs);
    for (auto& [d, n] : by_den) {
        if (n.is_zero()) continue;
        acc += RationalFn(n, d);
    }
    return acc;
}

MultiPoly norm_sq(const VarSpace& vs, Family hol) {
    Family bar = hol == Family::Zeta ? Family::ZetaBar : Family::ZBar;
    return dot(vs, hol, bar);
}

MultiPoly dot(const VarSpace& vs, Family a, Family b) {
    MultiPoly p(vs);
    for (int j = 0; j <= vs.N; ++j) {
        Exps e(vs.nvars(), 0);
        e[vs.id(a, j)] += 1;
        e[vs.id(b, j)] += 1;
        p.add_term(e, GaussianRational(1));
    }
    return p;
}

} // namespace koppel
