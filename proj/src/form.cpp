#include "koppel/form.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace koppel {

uint32_t block_mask(const VarSpace& vs, GenBlock b) {
    uint32_t per = static_cast<uint32_t>(vs.N + 1);
    return ((1u << per) - 1u) << (static_cast<int>(b) * per);
}

int block_count(const VarSpace& vs, uint32_t mask, GenBlock b) {
    return std::popcount(mask & block_mask(vs, b));
}

int gen_var(const VarSpace& vs, int g) {
    int per = vs.N + 1;
    int block = g / per, j = g % per;
    switch (static_cast<GenBlock>(block)) {
        case GenBlock::DZeta: return vs.id(Family::Zeta, j);
        case GenBlock::DZetaBar: return vs.id(Family::ZetaBar, j);
        case GenBlock::DZBar: return vs.id(Family::ZBar, j);
        case GenBlock::DW: return vs.id(Family::W, j);
    }
    throw std::logic_error("bad generator");
}

int wedge_sign(uint32_t ma, uint32_t mb) {
    int inv = 0;
    for (uint32_t rest = mb; rest;) {
        int g = std::countr_zero(rest);
        rest &= rest - 1;
        inv += std::popcount(ma >> (g + 1));
    }
    return (inv & 1) ? -1 : 1;
}

FormExpr FormExpr::scalar(RationalFn c) {
    FormExpr f(c.space());
    f.add(0u, c);
    return f;
}

FormExpr FormExpr::gen(const VarSpace& vs, GenBlock b, int j) {
    FormExpr f(vs);
    f.add(1u << gen_id(vs, b, j), RationalFn::one(vs));
    return f;
}

void FormExpr::add(uint32_t mask, const RationalFn& c) {
    if (c.is_zero()) return;
    auto it = comps.find(mask);
    if (it == comps.end()) {
        comps.emplace(mask, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) comps.erase(it);
    }
}

bool FormExpr::is_zero() const {
    for (const auto& [m, c] : comps)
        if (!c.is_zero()) return false;
    return true;
}

bool FormExpr::equals(const FormExpr& o) const {
    for (const auto& [m, c] : comps) {
        auto it = o.comps.find(m);
        if (it == o.comps.end()) {
            if (!c.is_zero()) return false;
        } else if (!c.equals(it->second)) {
            return false;
        }
    }
    for (const auto& [m, c] : o.comps)
        if (!comps.count(m) && !c.is_zero()) return false;
    return true;
}

FormExpr FormExpr::operator+(const FormExpr& o) const {
    FormExpr out = *this;
    for (const auto& [m, c] : o.comps) out.add(m, c);
    return out;
}

FormExpr FormExpr::operator-(const FormExpr& o) const { return *this + (-o); }

FormExpr FormExpr::operator-() const {
    FormExpr out(vs);
    for (const auto& [m, c] : comps) out.comps.emplace(m, -c);
    return out;
}

FormExpr FormExpr::operator*(const RationalFn& c) const {
    FormExpr out(vs);
    for (const auto& [m, k] : comps) out.add(m, k * c);
    return out;
}

FormExpr FormExpr::operator*(const GaussianRational& c) const {
    FormExpr out(vs);
    for (const auto& [m, k] : comps) out.add(m, k * c);
    return out;
}

FormExpr& FormExpr::operator+=(const FormExpr& o) {
    for (const auto& [m, c] : o.comps) add(m, c);
    return *this;
}

FormExpr FormExpr::extract(int n_dzeta, int n_dzetabar, int n_dzbar, int n_dw) const {
    int want[4] = {n_dzeta, n_dzetabar, n_dzbar, n_dw};
    FormExpr out(vs);
    for (const auto& [m, c] : comps) {
        bool ok = true;
        for (int b = 0; b < 4 && ok; ++b)
            if (want[b] >= 0 && block_count(vs, m, static_cast<GenBlock>(b)) != want[b]) ok = false;
        if (ok) out.comps.emplace(m, c);
    }
    return out;
}

FormExpr FormExpr::degree_part(int d) const {
    FormExpr out(vs);
    for (const auto& [m, c] : comps)
        if (std::popcount(m) == d) out.comps.emplace(m, c);
    return out;
}

int FormExpr::max_degree() const {
    int d = 0;
    for (const auto& [m, c] : comps)
        if (!c.is_zero()) d = std::max(d, std::popcount(m));
    return d;
}

std::string FormExpr::str() const {
    if (comps.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    static const char* blocks[4] = {"dzeta", "dzetab", "dzb", "dw"};
    for (const auto& [m, c] : comps) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (uint32_t rest = m; rest;) {
            int g = std::countr_zero(rest);
            rest &= rest - 1;
            os << "^" << blocks[g / (vs.N + 1)] << (g % (vs.N + 1));
        }
    }
    return os.str();
}

VectorFieldExpr VectorFieldExpr::from_block(const VarSpace& vs, GenBlock b,
                                            const std::vector<RationalFn>& coeffs) {
    VectorFieldExpr v(vs);
    for (int j = 0; j <= vs.N; ++j)
        if (!coeffs[j].is_zero()) v.comps.emplace(gen_id(vs, b, j), coeffs[j]);
    return v;
}

VectorFieldExpr VectorFieldExpr::eta(const VarSpace& vs) {
    std::vector<RationalFn> cs;
    for (int j = 0; j <= vs.N; ++j)
        cs.push_back(RationalFn(MultiPoly::pi2i(vs) * MultiPoly::var(vs, Family::Z, j)));
    return from_block(vs, GenBlock::DZeta, cs);
}

FormExpr wedge(const FormExpr& a, const FormExpr& b) {
    FormExpr out(a.vs);
    for (const auto& [ma, ca] : a.comps) {
        for (const auto& [mb, cb] : b.comps) {
            if (ma & mb) continue;
            RationalFn c = ca * cb;
            if (wedge_sign(ma, mb) < 0) c = -c;
            out.add(ma | mb, c);
        }
    }
    return out;
}

FormExpr wedge_pow(const FormExpr& a, int k) {
    FormExpr out = FormExpr::one(a.vs);
    for (int i = 0; i < k; ++i) out = wedge(out, a);
    return out;
}

FormExpr contract(const FormExpr& a, const VectorFieldExpr& v) {
    FormExpr out(a.vs);
    for (const auto& [m, c] : a.comps) {
        for (const auto& [g, vc] : v.comps) {
            uint32_t bit = 1u << g;
            if (!(m & bit)) continue;
            RationalFn term = c * vc;
            if (std::popcount(m & (bit - 1)) & 1) term = -term;
            out.add(m & ~bit, term);
        }
    }
    return out;
}

FormExpr dbar(const FormExpr& a, bool zeta_side, bool z_side) {
    const VarSpace& vs = a.vs;
    FormExpr out(vs);
    std::vector<GenBlock> blocks;
    if (zeta_side) blocks.push_back(GenBlock::DZetaBar);
    if (z_side) blocks.push_back(GenBlock::DZBar);
    for (const auto& [m, c] : a.comps) {
        for (GenBlock b : blocks) {
            for (int j = 0; j <= vs.N; ++j) {
                int g = gen_id(vs, b, j);
                uint32_t bit = 1u << g;
                if (m & bit) continue;
                RationalFn d = c.derivative(gen_var(vs, g));
                if (d.is_zero()) continue;
                if (std::popcount(m & (bit - 1)) & 1) d = -d;
                out.add(m | bit, d);
            }
        }
    }
    return out;
}

FormExpr nabla_eta(const FormExpr& a) {
    return contract(a, VectorFieldExpr::eta(a.vs)) - dbar(a);
}

namespace {

bool fn_free_of_w(const VarSpace& vs, const RationalFn& c) {
    auto wn = c.num.homogeneous_weight(Family::W);
    auto wd = c.den.homogeneous_weight(Family::W);
    return wn && *wn == 0 && wd && *wd == 0;
}

VectorFieldExpr euler_field(const VarSpace& vs, GenBlock b, Family f) {
    std::vector<RationalFn> cs;
    for (int j = 0; j <= vs.N; ++j) cs.push_back(RationalFn(MultiPoly::var(vs, f, j)));
    return VectorFieldExpr::from_block(vs, b, cs);
}

} // namespace

bool is_projective(const FormExpr& a, long p_zeta, long p_z, std::string* why) {
    const VarSpace& vs = a.vs;
    auto reject = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    for (const auto& [m, c] : a.comps) {
        if (c.is_zero()) continue;
        if (block_count(vs, m, GenBlock::DW) > 0 || !fn_free_of_w(vs, c))
            return reject("component touches the w family");
        auto wz = c.combined_weight(true);
        auto wb = c.combined_weight(false);
        if (!wz || !wb) return reject("inhomogeneous coefficient: " + c.str());
        long ndz = block_count(vs, m, GenBlock::DZeta);
        long ndzb = block_count(vs, m, GenBlock::DZetaBar);
        long nzb = block_count(vs, m, GenBlock::DZBar);
        if (wz->first != p_zeta) return reject("zeta-holomorphic weight mismatch");
        if (wz->second != -ndzb) return reject("zetabar weight mismatch");
        if (wb->first != p_z - ndz) return reject("z-holomorphic weight mismatch");
        if (wb->second != -nzb) return reject("zbar weight mismatch");
    }
    if (!contract(a, euler_field(vs, GenBlock::DZeta, Family::Zeta)).is_zero())
        return reject("nonzero zeta Euler contraction");
    if (!contract(a, euler_field(vs, GenBlock::DZetaBar, Family::ZetaBar)).is_zero())
        return reject("nonzero zetabar Euler contraction");
    if (!contract(a, euler_field(vs, GenBlock::DZBar, Family::ZBar)).is_zero())
        return reject("nonzero zbar Euler contraction");
    return true;
}

FormExpr omega_form(const VarSpace& vs) {
    uint32_t all = block_mask(vs, GenBlock::DZeta);
    FormExpr vol(vs);
    vol.add(all, RationalFn::one(vs));
    return contract(vol, euler_field(vs, GenBlock::DZeta, Family::Zeta));
}

FormExpr theta_divide(const FormExpr& a, int j) {
    const VarSpace& vs = a.vs;
    if (j < 0) j = vs.N;
    uint32_t sj = block_mask(vs, GenBlock::DZeta) & ~(1u << gen_id(vs, GenBlock::DZeta, j));
    RationalFn zj(MultiPoly::var(vs, Family::Zeta, j));
    if (j & 1) zj = -zj;
    FormExpr theta(vs);
    for (const auto& [m, c] : a.comps) {
        if ((m & block_mask(vs, GenBlock::DZeta)) != sj) continue;
        uint32_t rest = m & ~sj;
        RationalFn t = c / zj;
        if (wedge_sign(rest, sj) < 0) t = -t;
        theta.add(rest, t);
    }
    if (!wedge(theta, omega_form(vs)).equals(a))
        throw std::runtime_error("form is not divisible by the projective volume form");
    return theta;
}

std::map<uint32_t, std::complex<double>> eval_form(const FormExpr& a, const Point& p,
                                                   double pole_floor) {
    std::map<uint32_t, std::complex<double>> out;
    for (const auto& [m, c] : a.comps) {
        std::complex<double> v = c.eval(p, pole_floor);
        if (v != std::complex<double>(0, 0)) out[m] += v;
    }
    return out;
}

} // namespace koppel
