#include "koppel/weights.hpp"

#include <sstream>

namespace koppel {

namespace {

MultiPoly zeta(const VarSpace& vs, int j) { return MultiPoly::var(vs, Family::Zeta, j); }
MultiPoly zetab(const VarSpace& vs, int j) { return MultiPoly::var(vs, Family::ZetaBar, j); }
MultiPoly zzb(const VarSpace& vs, int j) { return MultiPoly::var(vs, Family::ZBar, j); }

VectorFieldExpr scalar_field(const VarSpace& vs, GenBlock b, Family f) {
    std::vector<RationalFn> cs;
    for (int j = 0; j <= vs.N; ++j) cs.push_back(RationalFn(MultiPoly::var(vs, f, j)));
    return VectorFieldExpr::from_block(vs, b, cs);
}

} // namespace

namespace {

/* Polynomial numerator 1-form s and denominator D of the Cauchy-Leray form:
   b = s / (2pii D). */
MultiPoly leray_den(const VarSpace& vs) {
    return norm_sq(vs, Family::Zeta) * norm_sq(vs, Family::Z) -
           dot(vs, Family::ZBar, Family::Zeta) * dot(vs, Family::ZetaBar, Family::Z);
}

FormExpr leray_num(const VarSpace& vs) {
    MultiPoly nz = norm_sq(vs, Family::Zeta);
    MultiPoly zb_dot_zeta = dot(vs, Family::ZBar, Family::Zeta);
    FormExpr s(vs);
    for (int j = 0; j <= vs.N; ++j)
        s.add(1u << gen_id(vs, GenBlock::DZeta, j),
              RationalFn(nz * zzb(vs, j) - zb_dot_zeta * zetab(vs, j)));
    return s;
}

} // namespace

FormExpr build_b(const VarSpace& vs) {
    RationalFn inv(MultiPoly::constant(vs, GaussianRational(1)),
                   MultiPoly::pi2i(vs) * leray_den(vs));
    return leray_num(vs) * inv;
}

FormExpr build_B(const VarSpace& vs) {
    /* b ^ (dbar b)^{k-1} = s ^ (dbar s)^{k-1} / ((2pii)^k D^k): the D-derivative
       terms of dbar b drop out against the extra copy of s by parity. */
    FormExpr s = leray_num(vs);
    FormExpr ds = dbar(s);
    MultiPoly D = leray_den(vs);
    FormExpr out = FormExpr::zero(vs);
    FormExpr num = s;
    MultiPoly den = MultiPoly::pi2i(vs) * D;
    for (int k = 1; k <= vs.N; ++k) {
        out += num * RationalFn(MultiPoly::constant(vs, GaussianRational(1)), den);
        if (k < vs.N) {
            num = wedge(num, ds);
            den = den * (MultiPoly::pi2i(vs) * D);
        }
    }
    return out;
}

WeightCheck verify_interp_B(const VarSpace& vs) {
    WeightCheck w;
    const int N = vs.N;
    FormExpr s = leray_num(vs);
    FormExpr ds = dbar(s);
    MultiPoly D = leray_den(vs);
    FormExpr Df = FormExpr::scalar(D);
    FormExpr dD = dbar(FormExpr::scalar(D));
    MultiPoly tpi = MultiPoly::pi2i(vs);

    /* delta_eta b = 1 cleared: delta_eta s = 2pii D */
    if (!contract(s, VectorFieldExpr::eta(vs)).equals(FormExpr::scalar(tpi * D))) {
        w.detail = "delta_eta s != 2pii D";
        return w;
    }
    /* (dbar b)^N = 0 cleared: D (dbar s)^N = N (dbar s)^{N-1} ^ dbar D ^ s */
    FormExpr dsN1 = wedge_pow(ds, N - 1);
    if (!wedge(Df, wedge(dsN1, ds))
             .equals(wedge(dsN1, wedge(dD, s)) * GaussianRational(N))) {
        w.detail = "top power of dbar b does not vanish";
        return w;
    }
    /* b ^ (dbar b)^{k-1} reduction: s ^ (D dbar s - dbar D ^ s)^{k-1}
       = D^{k-1} s ^ (dbar s)^{k-1} */
    FormExpr core = wedge(Df, ds) - wedge(dD, s);
    MultiPoly Dk = MultiPoly::constant(vs, GaussianRational(1));
    for (int k = 1; k <= N; ++k) {
        if (!wedge(s, wedge_pow(core, k - 1))
                 .equals(wedge(s, wedge_pow(ds, k - 1)) * RationalFn(Dk))) {
            w.detail = "closed form for b ^ (dbar b)^" + std::to_string(k - 1) + " fails";
            return w;
        }
        Dk = Dk * D;
    }
    /* nabla_eta B = 1 cleared by tpi^N D^{N+1}:
       sum_k tpi^{N-k} [ D^{N+1-k}(delta_eta n_k - dbar n_k) + k D^{N-k} dbar D ^ n_k ]
       = tpi^N D^{N+1},  n_k = s ^ (dbar s)^{k-1}. */
    VectorFieldExpr eta = VectorFieldExpr::eta(vs);
    FormExpr lhs = FormExpr::zero(vs);
    for (int k = 1; k <= N; ++k) {
        FormExpr nk = wedge(s, wedge_pow(ds, k - 1));
        MultiPoly tp = MultiPoly::constant(vs, GaussianRational(1));
        for (int i = 0; i < N - k; ++i) tp = tp * tpi;
        MultiPoly Dl = MultiPoly::constant(vs, GaussianRational(1));
        for (int i = 0; i < N - k; ++i) Dl = Dl * D;
        FormExpr term = (contract(nk, eta) - dbar(nk)) * RationalFn(tp * Dl * D) +
                        wedge(dD, nk) * RationalFn(tp * Dl * MultiPoly::constant(vs, GaussianRational(k)));
        lhs += term;
    }
    MultiPoly rhs = MultiPoly::constant(vs, GaussianRational(1));
    for (int i = 0; i < N; ++i) rhs = rhs * tpi;
    for (int i = 0; i <= N; ++i) rhs = rhs * D;
    if (!lhs.equals(FormExpr::scalar(rhs))) {
        w.detail = "cleared interpolation identity for B fails";
        return w;
    }
    w.ok = true;
    w.detail = "nabla_eta B = 1 verified through denominator-cleared identities";
    return w;
}

FormExpr build_alpha(const VarSpace& vs) {
    MultiPoly nz = norm_sq(vs, Family::Zeta);
    FormExpr a = FormExpr::scalar(RationalFn(dot(vs, Family::Z, Family::ZetaBar), nz));
    FormExpr lead(vs);
    for (int j = 0; j <= vs.N; ++j)
        lead.add(1u << gen_id(vs, GenBlock::DZeta, j),
                 RationalFn(zetab(vs, j), MultiPoly::pi2i(vs) * nz));
    return a - dbar(lead);
}

FormExpr build_tau(const VarSpace& vs) {
    MultiPoly den = MultiPoly::pi2i(vs) * norm_sq(vs, Family::Z);
    FormExpr t(vs);
    for (int j = 0; j <= vs.N; ++j) {
        uint32_t m = (1u << gen_id(vs, GenBlock::DZBar, j)) | (1u << gen_id(vs, GenBlock::DZeta, j));
        /* dzbar_j ^ dzeta_j: dzeta sorts first, one transposition */
        t.add(m, -RationalFn(MultiPoly::constant(vs, GaussianRational(1)), den));
    }
    return t;
}

FormExpr build_beta(const VarSpace& vs) {
    FormExpr tau = build_tau(vs);
    FormExpr dzt = contract(tau, scalar_field(vs, GenBlock::DZBar, Family::ZBar));
    FormExpr series = FormExpr::one(vs);
    FormExpr pow = FormExpr::one(vs);
    for (int k = 1; k <= vs.N; ++k) {
        pow = wedge(pow, tau);
        series += pow;
    }
    FormExpr inner = wedge(dzt, series);
    return contract(inner, scalar_field(vs, GenBlock::DZeta, Family::Zeta)) *
           RationalFn(MultiPoly::pi2i(vs));
}

std::vector<FormExpr> build_gamma_alpha(const VarSpace& vs) {
    MultiPoly nz = norm_sq(vs, Family::Zeta);
    FormExpr s(vs);
    for (int j = 0; j <= vs.N; ++j)
        s.add(1u << gen_id(vs, GenBlock::DZeta, j), RationalFn(zetab(vs, j), nz));
    std::vector<FormExpr> out;
    for (int j = 0; j <= vs.N; ++j)
        out.push_back(FormExpr::gen(vs, GenBlock::DZeta, j) - s * RationalFn(zeta(vs, j)));
    return out;
}

std::vector<FormExpr> build_gamma_beta(const VarSpace& vs) {
    FormExpr tau = build_tau(vs);
    FormExpr dzt = contract(tau, scalar_field(vs, GenBlock::DZBar, Family::ZBar));
    FormExpr series = FormExpr::one(vs);
    FormExpr pow = FormExpr::one(vs);
    for (int k = 1; k <= vs.N; ++k) {
        pow = wedge(pow, tau);
        series += pow;
    }
    std::vector<FormExpr> out;
    for (int j = 0; j <= vs.N; ++j) {
        FormExpr inner = wedge(wedge(dzt, series), FormExpr::gen(vs, GenBlock::DZeta, j));
        out.push_back(contract(inner, scalar_field(vs, GenBlock::DZeta, Family::Zeta)));
    }
    return out;
}

const FormExpr& alpha_power(const VarSpace& vs, long m) {
    static std::map<std::pair<int, long>, FormExpr> cache;
    auto key = std::make_pair(vs.N, m);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    FormExpr alpha = build_alpha(vs);
    FormExpr a00 = alpha.extract(0, 0, 0, 0);
    FormExpr a11 = alpha - a00;
    RationalFn s = a00.comps.count(0u) ? a00.comps.at(0u) : RationalFn::zero(vs);
    FormExpr out = FormExpr::zero(vs);
    /* sum_i C(m,i) a00^{m-i} a11^i truncates: a11^i = 0 once 2i exceeds the
       available dzeta degree */
    FormExpr apow = FormExpr::one(vs);
    for (long i = 0; i <= m && i <= vs.N; ++i) {
        RationalFn c = RationalFn(MultiPoly::constant(vs, binomial_gr(m, i)));
        RationalFn spow = RationalFn::one(vs);
        for (long k = 0; k < m - i; ++k) spow = spow * s;
        out += apow * (c * spow);
        apow = wedge(apow, a11);
        if (apow.is_zero()) break;
    }
    return cache.emplace(key, std::move(out)).first->second;
}

FormExpr restrict_diagonal_coeffs(const FormExpr& g) {
    const VarSpace& vs = g.vs;
    std::map<int, MultiPoly> bind;
    for (int j = 0; j <= vs.N; ++j) {
        bind[vs.id(Family::Z, j)] = zeta(vs, j);
        bind[vs.id(Family::ZBar, j)] = zetab(vs, j);
    }
    FormExpr out(vs);
    for (const auto& [m, c] : g.comps) out.add(m, c.substitute(bind));
    return out;
}

WeightCheck verify_weight(const FormExpr& g, long p_zeta, long p_z) {
    WeightCheck w;
    FormExpr ng = nabla_eta(g);
    if (!ng.is_zero()) {
        w.detail = "nabla_eta g != 0";
        return w;
    }
    std::string why;
    if (!is_projective(g, p_zeta, p_z, &why)) {
        w.detail = "not projective: " + why;
        return w;
    }
    FormExpr g00 = restrict_diagonal_coeffs(g.extract(0, 0, 0, 0));
    if (!g00.equals(FormExpr::one(g.vs))) {
        w.detail = "scalar part is not 1 on the diagonal";
        return w;
    }
    w.ok = true;
    std::ostringstream os;
    os << "weight of bidegree (" << p_zeta << "," << p_z << "): nabla-closed, projective, "
       << "normalized on the diagonal";
    w.detail = os.str();
    return w;
}

} // namespace koppel
