#include "dtor/drinfeld.hpp"

#include <algorithm>
#include <stdexcept>

#include "dtor/epsilon.hpp"
#include "dtor/newton.hpp"
#include "dtor/xi.hpp"

namespace dtor {

namespace {

bool known_nonzero(const Laurent& x) { return !x.is_zero(); }

long min_precision(const AddSeries& f, int upto) {
    long p = Laurent::kExact;
    for (int i = 0; i <= upto && i <= f.bound(); ++i) p = std::min(p, f.coeff(i).precision());
    return p;
}

long ipow(long b, long e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

std::string DrinfeldModule::text() const { return "d=" + std::to_string(d) + " phi(T) = " + phi_T.text(); }

DrinfeldModule make_module(const AddSeries& phi_T, int d) {
    if (!phi_T.is_polynomial()) throw std::invalid_argument("phi(T) must be a polynomial in tau");
    if (phi_T.bound() < 0 || phi_T.coeff(0).is_zero()) throw std::invalid_argument("gamma(T) vanishes");
    bool unit = false;
    for (int i = 1; i <= phi_T.bound(); ++i) unit = unit || phi_T.coeff(i).is_unit();
    if (!unit) throw std::invalid_argument("no coefficient of phi(T) above tau^0 is a unit");
    if (phi_T.degree() > d) throw std::invalid_argument("tau-degree of phi(T) exceeds the declared rank");
    return DrinfeldModule{phi_T, d};
}

DrinfeldModule module_from_strings(const Fq& F, const std::vector<std::string>& coeffs, int d) {
    std::vector<Laurent> c;
    for (const auto& s : coeffs) c.push_back(Laurent::from_poly(Poly::parse(F, s)));
    return make_module(AddSeries::poly(F, std::move(c)), d);
}

AddSeries phi_eval(const DrinfeldModule& phi, const Poly& a, long t_cap) {
    const Fq& F = phi.field();
    AddSeries acc = AddSeries::poly(F, {});
    AddSeries pw = AddSeries::identity(F);
    for (int i = 0; i <= a.degree(); ++i) {
        if (i > 0) pw = skew_compose(phi.phi_T, pw, 1 << 20, t_cap);
        if (a.coeff(i)) acc = acc + pw.scale(Laurent::monomial(F, a.coeff(i), 0));
    }
    return acc;
}

int reduction_rank(const DrinfeldModule& phi) {
    for (int i = 0; i <= phi.phi_T.bound(); ++i) {
        const Laurent& c = phi.phi_T.coeff(i);
        if (!c.is_zero() && c.valuation() < 0) throw std::domain_error("phi(T) is not defined over F_q[[t]]");
    }
    for (int i = phi.phi_T.bound(); i >= 1; --i)
        if (phi.phi_T.coeff(i).is_unit()) return i;
    throw std::domain_error("no unit coefficient in phi(T)");
}

Laurent lattice_generator(const Fq& F, const LatticeStep& step) {
    if (step.m < 1) throw std::invalid_argument("lattice valuation m must be positive");
    Poly u = step.unit.has_field() && !step.unit.is_zero() ? step.unit : Poly::constant(F, 1);
    if (u.coeff(0) == 0) throw std::invalid_argument("lattice unit vanishes at t = 0");
    return Laurent::from_poly(u).shift(-step.m);
}

bool admissible(const DrinfeldModule& psi, const LatticeStep& step, std::string* why) {
    int r = psi.phi_T.degree();
    const Laurent& f = psi.phi_T.coeff(r);
    if (step.m < 1) {
        if (why) *why = "m < 1";
        return false;
    }
    long val = -psi.q() * f.valuation() + step.m * (ipow(psi.q(), r) - 1) * (psi.q() - 1);
    if (val < 0) {
        if (why)
            *why = "-q v(f) + m(q^r-1)(q-1) = " + std::to_string(val) + " < 0 with v(f) = " + std::to_string(f.valuation());
        return false;
    }
    return true;
}

namespace {

// exponential modulo t^W with layers cut at -v(lambda) <= cutoff
Exponential exp_at(const DrinfeldModule& psi, const LatticeStep& step, int tau_bound, long W, long cutoff) {
    const Fq& F = psi.field();
    long q = F.q();
    Exponential out;
    Laurent w = lattice_generator(F, step);
    long prev = -1;
    while (true) {
        if (!known_nonzero(w)) throw PrecisionError("lattice element vanishes to precision");
        long nv = -w.valuation();
        if (nv > cutoff) break;
        if (nv <= prev) throw std::domain_error("lattice element valuations are not increasing");
        prev = nv;
        out.basis.push_back(w);
        out.neg_val.push_back(nv);
        w = psi.phi_T.eval(w);
    }
    if (static_cast<int>(out.basis.size()) > tau_bound)
        throw std::domain_error("cutoff needs " + std::to_string(out.basis.size()) + " layers, bound is " +
                                std::to_string(tau_bound));

    AddSeries e = AddSeries::identity(F);
    std::vector<Laurent> u = out.basis;
    for (size_t j = 0; j < u.size(); ++j) {
        const Laurent& y = u[j];
        if (y.is_zero()) throw PrecisionError("e(lambda) vanishes to precision");
        long va = -(q - 1) * y.valuation();
        if (va >= W) break;
        long rel = W - va;
        Laurent alpha = y.pow(q - 1, rel).inv(rel).truncate(W);
        e = skew_compose(AddSeries::poly(F, {Laurent::one(F), -alpha}), e, 1 << 20, W);
        for (size_t l = j + 1; l < u.size(); ++l) u[l] = u[l] - alpha * u[l].frobenius(1);
    }
    out.e = e;
    out.precision = min_precision(e, e.bound());
    return out;
}

Quotient quotient_at(const DrinfeldModule& psi, const LatticeStep& step, long W) {
    const Fq& F = psi.field();
    int r = psi.phi_T.degree();
    int d = r + 1;
    int M = d + 2;
    Quotient out;
    out.exp = exp_at(psi, step, 1 << 20, W, W);
    const AddSeries& e = out.exp.e;
    AddSeries einv = compositional_inverse(e, M, W);
    AddSeries ph = skew_compose(skew_compose(e, psi.phi_T, M, W), einv, M, W);
    long p = min_precision(ph, d);
    out.tail_min_valuation = Laurent::kExact;
    for (int i = d + 1; i <= M && i <= ph.bound(); ++i) {
        const Laurent& c = ph.coeff(i);
        long v = c.is_zero() ? c.precision() : c.valuation();
        out.tail_min_valuation = std::min(out.tail_min_valuation, v);
        ++out.tail_checked;
        if (!c.is_zero() && v < p)
            throw std::runtime_error("coefficient of z^{q^" + std::to_string(i) + "} has valuation " + std::to_string(v) +
                                     " below the precision " + std::to_string(p));
    }
    std::vector<Laurent> c;
    for (int i = 0; i <= d; ++i) c.push_back(ph.coeff(i).truncate(p));
    out.phi = DrinfeldModule{AddSeries::poly(F, std::move(c)), d};
    if (out.phi.phi_T.degree() != d) throw PrecisionError("leading coefficient of the quotient vanishes to precision");
    return out;
}

constexpr int kDoublings = 5;

}  // namespace

Exponential exp_from_lattice(const DrinfeldModule& psi, const LatticeStep& step, int tau_bound, long t_precision,
                             long cutoff) {
    if (t_precision < 1 || tau_bound < 1) throw std::invalid_argument("bounds must be positive");
    std::string why;
    if (!admissible(psi, step, &why)) throw std::domain_error("lattice step not admissible: " + why);
    if (cutoff < 0) cutoff = t_precision;
    long W = t_precision + 8;
    for (int round = 0; round <= kDoublings; ++round, W *= 2) {
        Exponential ex = exp_at(psi, step, tau_bound, W, cutoff);
        if (ex.precision >= t_precision) {
            ex.e = ex.e.truncate_t(t_precision);
            ex.precision = t_precision;
            return ex;
        }
    }
    throw PrecisionError("exponential not resolved to t^" + std::to_string(t_precision));
}

Quotient quotient_construct(const DrinfeldModule& psi, const LatticeStep& step, long t_precision) {
    std::string why;
    if (!admissible(psi, step, &why)) throw std::domain_error("lattice step not admissible: " + why);
    long W = t_precision + 8;
    for (int round = 0; round <= kDoublings; ++round, W *= 2) {
        Quotient qt = quotient_at(psi, step, W);
        if (min_precision(qt.phi.phi_T, qt.phi.d) >= t_precision) {
            qt.phi.phi_T = qt.phi.phi_T.truncate_t(t_precision);
            return qt;
        }
    }
    throw PrecisionError("quotient not resolved to t^" + std::to_string(t_precision));
}

Tower iterate_quotient(const DrinfeldModule& base, const std::vector<LatticeStep>& specs, long t_precision) {
    long W = t_precision + 8;
    std::string why;
    for (int round = 0; round <= kDoublings; ++round, W *= 2) {
        Tower tw;
        tw.modules.push_back(base);
        tw.specs = specs;
        tw.precision = t_precision;
        tw.base_rank = reduction_rank(base);
        bool ok = true;
        for (const auto& sp : specs) {
            if (!admissible(tw.modules.back(), sp, &why))
                throw std::domain_error("step " + std::to_string(tw.steps.size() + 1) + " not admissible: " + why);
            Quotient qt;
            try {
                qt = quotient_at(tw.modules.back(), sp, W);
            } catch (const PrecisionError&) {
                ok = false;
                break;
            }
            tw.modules.push_back(qt.phi);
            tw.steps.push_back(qt);
        }
        if (!ok || min_precision(tw.top().phi_T, tw.top().d) < t_precision) continue;
        tw.modules.back().phi_T = tw.modules.back().phi_T.truncate_t(t_precision);
        long q = base.q();
        for (const auto& sp : specs) {
            if (tw.s.empty())
                tw.s.push_back(Q(sp.m));
            else
                tw.s.push_back(eps_inverse(q, tw.base_rank, tw.s, Q(sp.m)));
        }
        return tw;
    }
    throw PrecisionError("tower not resolved to t^" + std::to_string(t_precision));
}

std::vector<Q> torsion_valuations(const DrinfeldModule& phi, const Poly& N, long t_cap) {
    if (N.is_zero()) throw std::invalid_argument("N = 0");
    AddSeries f = phi_eval(phi, N, t_cap);
    return expand_slopes(newton_slopes(f.z_terms()));
}

QVec lattice_valuations_newton(const Tower& tw) {
    const Fq& F = tw.modules[0].field();
    long q = F.q();
    QVec out;
    AddSeries E = AddSeries::identity(F);
    for (size_t j = 0; j < tw.steps.size(); ++j) {
        Laurent y = lattice_generator(F, tw.specs[j]);
        if (j == 0) {
            out.push_back(Q(-y.valuation()));
        } else {
            // roots of E(z) - y; beyond the last layer E has slopes above the cutoff
            std::vector<std::pair<long, Laurent>> terms;
            terms.emplace_back(1, -y);
            long x = 1;
            for (int i = 0; i <= E.degree(); ++i) {
                terms.emplace_back(x + 1, E.coeff(i));
                x *= q;
            }
            auto roots = expand_slopes(newton_slopes(terms));
            out.push_back(-roots.back());
        }
        E = skew_compose(tw.steps[j].exp.e, E, 1 << 20, tw.steps[j].exp.precision);
    }
    return out;
}

ClassPoint class_point(const Tower& tw) {
    if (tw.modules[0].d != tw.base_rank) throw std::domain_error("base module is not of good reduction");
    ClassPoint c;
    c.r = tw.base_rank;
    c.d = tw.base_rank + static_cast<int>(tw.s.size());
    c.powers = tw.s;
    std::sort(c.powers.begin(), c.powers.end());
    return c;
}

ClassPoint class_point_N(const Tower& tw, int k) {
    ClassPoint c = class_point(tw);
    QVec plain = xi_eval(tw.modules[0].q(), k, c.full_powers());
    ClassPoint out;
    out.r = c.r;
    out.d = c.d;
    out.powers.assign(plain.begin() + (c.r - 1), plain.end());
    for (auto& p : out.powers) p = qpow(p, c.r);
    return out;
}

ClassPoint class_point_N_newton(const Tower& tw, const Poly& N) {
    ClassPoint c = class_point(tw);
    long q = tw.modules[0].q();
    int k = N.degree();
    int n = c.d - c.r;
    auto vals = torsion_valuations(tw.top(), N);
    std::vector<Q> pos;
    long nonpos = 0;
    for (const auto& v : vals) {
        if (v < 0)
            pos.push_back(-v);
        else
            ++nonpos;
    }
    std::sort(pos.begin(), pos.end());
    long qrk = ipow(q, static_cast<long>(c.r) * k);
    if (nonpos != qrk - 1 || static_cast<long>(pos.size()) != qrk * (ipow(q, static_cast<long>(n) * k) - 1))
        throw std::domain_error("torsion valuation counts do not match the reduction rank");
    ClassPoint out;
    out.r = c.r;
    out.d = c.d;
    for (int i = 1; i <= n; ++i) {
        long ci = qrk * (ipow(q, static_cast<long>(k) * (i - 1)) - 1);
        out.powers.push_back(qpow(pos[ci], c.r));
    }
    return out;
}

}  // namespace dtor
