#include "hardy/qverify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/special_functions/legendre.hpp>

#include "hardy/sums.hpp"

namespace hardy {

namespace {

constexpr double pi = std::numbers::pi;
const Complex I1(0.0, 1.0);
constexpr int max_terms = 20000;

// sigma_1(n) and its odd-divisor part, n <= 2 * max_terms.
struct DivisorTables {
    std::vector<double> sigma;
    std::vector<double> sigma_odd;

    DivisorTables() : sigma(2 * max_terms + 1, 0.0), sigma_odd(2 * max_terms + 1, 0.0)
    {
        const int n = 2 * max_terms;
        for (int d = 1; d <= n; ++d) {
            for (int m = d; m <= n; m += d) {
                sigma[m] += d;
                if (d % 2 == 1) {
                    sigma_odd[m] += d;
                }
            }
        }
    }
};

const DivisorTables &tables()
{
    static const DivisorTables t;
    return t;
}

// Below this the remaining terms cannot move a double.
constexpr double negligible = 1e-18;

Complex e_of(Complex z)
{
    return std::exp(2.0 * pi * I1 * z);
}

Complex principal_log_factor(Complex w)
{
    if (w.real() <= 0) {
        throw std::domain_error("product factor with non-positive real part; the term-wise logarithm is ambiguous");
    }
    return std::log(w);
}

CocycleReport report(Complex lhs, Complex rhs, double tol, std::string note = {})
{
    CocycleReport r;
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_error = std::abs(lhs - rhs);
    r.pass = std::isfinite(r.abs_error) && r.abs_error < tol;
    r.note = std::move(note);
    return r;
}

CocycleReport not_evaluated(std::string why)
{
    CocycleReport r;
    r.evaluated = false;
    r.pass = false;
    r.abs_error = std::nan("");
    r.note = std::move(why);
    return r;
}

void add_note(std::string &note, const std::string &more)
{
    if (!note.empty()) {
        note += "; ";
    }
    note += more;
}

void warn_truncation(std::string &note, const HalfPlanePoint &z, const SeriesParams &p)
{
    if (auto w = truncation_warning(z, p)) {
        add_note(note, *w);
    }
}

double to_d(const Integer &v)
{
    return v.get_d();
}

// (6/pi i) log((cz + d)/(sign(c) i)); the argument lies in the right half plane.
Complex cocycle_log_term(const Integer &c, const Integer &d, Complex z)
{
    Complex w = (to_d(c) * z + to_d(d)) / (static_cast<double>(sign(c)) * I1);
    return 6.0 / (pi * I1) * std::log(w);
}

// 1/2 log((cz + d)/i) for c > 0.
Complex half_log_term(const Integer &c, const Integer &d, Complex z)
{
    return 0.5 * std::log((to_d(c) * z + to_d(d)) / I1);
}

void require_member(const Mat2 &a, GroupTag tag)
{
    if (!in_group(a, tag)) {
        throw std::domain_error("matrix " + a.str() + " is not in " + std::string(to_string(tag)));
    }
}

void require_positive_c(const Mat2 &a)
{
    if (a.c() <= 0) {
        throw std::domain_error("transformation law needs c > 0 (got " + a.str() + ")");
    }
}

Complex e2_minus_r(const HalfPlanePoint &w, const SeriesParams &p)
{
    return e2_eval(w, p) - R_eval(w, p);
}

Complex e2_minus_l(const HalfPlanePoint &w, const SeriesParams &p)
{
    return e2_eval(w, p) - L_eval(w, p);
}

struct GaussRule {
    std::vector<double> x; // nodes on [-1, 1]
    std::vector<double> w;
};

GaussRule gauss_rule(int n)
{
    GaussRule g;
    for (double r : boost::math::legendre_p_zeros<double>(n)) {
        double dp = boost::math::legendre_p_prime<double>(n, r);
        double wt = 2.0 / ((1.0 - r * r) * dp * dp);
        g.x.push_back(r);
        g.w.push_back(wt);
        if (r != 0.0) {
            g.x.push_back(-r);
            g.w.push_back(wt);
        }
    }
    return g;
}

} // namespace

HalfPlanePoint::HalfPlanePoint(double re, double im) : z_(re, im)
{
    if (!(im > 0) || !std::isfinite(re) || !std::isfinite(im)) {
        throw std::domain_error("point is not in the upper half plane");
    }
}

void SeriesParams::validate() const
{
    if (terms < 1 || terms > max_terms) {
        throw std::invalid_argument("terms must be in [1, " + std::to_string(max_terms) + "]");
    }
    if (quad_nodes < 2) {
        throw std::invalid_argument("quad_nodes must be at least 2");
    }
    if (!(tol > 0)) {
        throw std::invalid_argument("tol must be positive");
    }
}

Complex act(const Mat2 &m, Complex z)
{
    return (to_d(m.a()) * z + to_d(m.b())) / (to_d(m.c()) * z + to_d(m.d()));
}

HalfPlanePoint balanced_basepoint(const Mat2 &a)
{
    if (a.c() == 0) {
        return HalfPlanePoint(0.0, 1.0);
    }
    const double c = to_d(a.c());
    return HalfPlanePoint(-to_d(a.d()) / c, 1.0 / std::abs(c));
}

std::optional<std::string> truncation_warning(const HalfPlanePoint &z, const SeriesParams &p)
{
    // The worst series is L with 2N terms of size <= 24 n^2 e^{-pi n y}.
    const double n = 2.0 * p.terms;
    const double r = std::exp(-pi * z.im());
    const double tail = 24.0 * n * n * std::pow(r, n) / (1.0 - r);
    if (tail < p.tol) {
        return std::nullopt;
    }
    return "series tail about " + std::to_string(tail) + " at im(z) = " + std::to_string(z.im()) +
           "; raise --terms";
}

Complex e2_eval(const HalfPlanePoint &z, const SeriesParams &p)
{
    p.validate();
    const auto &t = tables();
    const Complex q = e_of(z.z());
    const double r = std::abs(q);
    Complex qn = 1.0, sum = 0.0;
    for (int n = 1; n <= p.terms; ++n) {
        qn *= q;
        sum += t.sigma[n] * qn;
        if (24.0 * n * n * std::abs(qn) < negligible * (1.0 - r)) {
            break;
        }
    }
    return 1.0 - 24.0 * sum;
}

Complex L_eval(const HalfPlanePoint &z, const SeriesParams &p)
{
    p.validate();
    const auto &t = tables();
    const Complex h = std::exp(pi * I1 * z.z());
    const double r = std::abs(h);
    Complex hn = 1.0, sum = 0.0;
    for (int n = 1; n <= 2 * p.terms; ++n) {
        hn *= h;
        sum += t.sigma_odd[n] * hn;
        if (24.0 * n * n * std::abs(hn) < negligible * (1.0 - r)) {
            break;
        }
    }
    return 1.0 + 24.0 * sum;
}

Complex R_eval(const HalfPlanePoint &z, const SeriesParams &p)
{
    return L_eval(HalfPlanePoint(z.re() + 1.0, z.im()), p);
}

Complex log_eta(const HalfPlanePoint &z, const SeriesParams &p)
{
    p.validate();
    const Complex q = e_of(z.z());
    Complex qn = 1.0, sum = pi * I1 * z.z() / 12.0;
    for (int n = 1; n <= p.terms; ++n) {
        qn *= q;
        sum += principal_log_factor(1.0 - qn);
        if (std::abs(qn) < negligible) {
            break;
        }
    }
    return sum;
}

namespace {

// sum log(1 - e(nz)) + 2 log(1 + sgn e((n - 1/2) z))
Complex log_theta_product(const HalfPlanePoint &z, const SeriesParams &p, double sgn)
{
    p.validate();
    const Complex h = std::exp(pi * I1 * z.z()); // e(z/2)
    const Complex q = h * h;
    Complex qn = 1.0; // e(nz)
    Complex half = h; // e((n - 1/2) z)
    Complex sum = 0.0;
    for (int n = 1; n <= p.terms; ++n) {
        qn *= q;
        sum += principal_log_factor(1.0 - qn) + 2.0 * principal_log_factor(1.0 + sgn * half);
        if (std::abs(half) < negligible) {
            break;
        }
        half *= q;
    }
    return sum;
}

} // namespace

Complex log_theta(const HalfPlanePoint &z, const SeriesParams &p)
{
    return log_theta_product(z, p, 1.0);
}

Complex log_theta4(const HalfPlanePoint &z, const SeriesParams &p)
{
    return log_theta_product(z, p, -1.0);
}

QuadratureResult segment_integral(const SeriesFn &f, const HalfPlanePoint &z0, const HalfPlanePoint &z1,
                                  const SeriesParams &p)
{
    p.validate();
    QuadratureResult out;
    const Complex dz = z1.z() - z0.z();
    if (dz == Complex(0.0)) {
        out.value = 0.0;
        return out;
    }
    const GaussRule rule = gauss_rule(p.quad_nodes);
    auto panel = [&](double a, double b) {
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        Complex s = 0.0;
        for (std::size_t i = 0; i < rule.x.size(); ++i) {
            double t = mid + half * rule.x[i];
            s += rule.w[i] * f(HalfPlanePoint(z0.z() + t * dz), p);
        }
        return s * half * dz;
    };

    // Per unit of the parameter; well below the tolerance the checks use.
    const double local_tol = p.tol * 1e-3;
    constexpr int max_depth = 40;
    constexpr int max_panels = 1 << 16;
    struct Piece {
        double a, b;
        Complex whole;
        int depth;
    };
    std::vector<Piece> stack{{0.0, 1.0, panel(0.0, 1.0), 0}};
    while (!stack.empty()) {
        Piece pc = stack.back();
        stack.pop_back();
        const double m = 0.5 * (pc.a + pc.b);
        const Complex left = panel(pc.a, m), right = panel(m, pc.b);
        const double diff = std::abs(left + right - pc.whole);
        if (diff <= local_tol * (pc.b - pc.a) || pc.depth >= max_depth || out.panels >= max_panels) {
            if (diff > local_tol * (pc.b - pc.a)) {
                out.converged = false;
            }
            out.value += left + right;
            out.error_estimate += diff;
            out.panels += 2;
        } else {
            stack.push_back({pc.a, m, left, pc.depth + 1});
            stack.push_back({m, pc.b, right, pc.depth + 1});
        }
    }
    return out;
}

QuadratureResult path_integral(const SeriesFn &f, const HalfPlanePoint &z0, const HalfPlanePoint &z1,
                               const SeriesParams &p)
{
    const double h = std::max({1.0, z0.im(), z1.im()});
    const HalfPlanePoint up(z0.re(), h), across(z1.re(), h);
    QuadratureResult out;
    for (auto [a, b] : {std::pair{z0, up}, std::pair{up, across}, std::pair{across, z1}}) {
        QuadratureResult leg = segment_integral(f, a, b, p);
        out.value += leg.value;
        out.error_estimate += leg.error_estimate;
        out.panels += leg.panels;
        out.converged = out.converged && leg.converged;
    }
    return out;
}

CocycleReport check_e2_quasimodular(const Mat2 &a, const HalfPlanePoint &z, const SeriesParams &p)
{
    const Complex w = act(a, z.z());
    const Complex j = to_d(a.c()) * z.z() + to_d(a.d());
    std::string note;
    warn_truncation(note, w, p);
    Complex lhs = e2_eval(w, p) / (j * j);
    Complex rhs = e2_eval(z, p) + 6.0 / (pi * I1) * to_d(a.c()) / j;
    return report(lhs, rhs, p.tol, note);
}

CocycleReport check_eta_transform(const Mat2 &a, const HalfPlanePoint &z, const SeriesParams &p)
{
    require_positive_c(a);
    const Complex w = act(a, z.z());
    std::string note;
    warn_truncation(note, w, p);
    Complex lhs = log_eta(w, p) - log_eta(z, p);
    Rational corr = Rational(a.a() + a.d(), a.c()) - Rational(12) * dedekind_recursive(a.d(), a.c());
    Complex rhs = half_log_term(a.c(), a.d(), z.z()) + pi * I1 / 12.0 * corr.to_double();
    return report(lhs, rhs, p.tol, note);
}

CocycleReport check_theta_transform(const Mat2 &a, const HalfPlanePoint &z, const SeriesParams &p)
{
    require_member(a, GroupTag::Theta);
    require_positive_c(a);
    const Complex w = act(a, z.z());
    std::string note;
    warn_truncation(note, w, p);
    Complex lhs = log_theta(w, p) - log_theta(z, p);
    Complex rhs = half_log_term(a.c(), a.d(), z.z()) + pi * I1 / 4.0 * to_d(hardy_s_from_cfe(a.d(), a.c()));
    return report(lhs, rhs, p.tol, note);
}

CocycleReport check_theta4_transform(const Mat2 &a, const HalfPlanePoint &z, const SeriesParams &p)
{
    require_member(a, GroupTag::Gamma02);
    require_positive_c(a);
    const Complex w = act(a, z.z());
    std::string note;
    warn_truncation(note, w, p);
    Complex lhs = log_theta4(w, p) - log_theta4(z, p);
    Complex rhs = half_log_term(a.c(), a.d(), z.z()) - pi * I1 / 4.0 * to_d(hardy_s4_from_cfe(a.d(), a.c()));
    return report(lhs, rhs, p.tol, note);
}

namespace {

Mat2 cycle_factor(const Integer &ak, std::size_t k)
{
    const long s = (k % 2 == 0) ? 1 : -1; // (-1)^k
    return Mat2(ak, -s, s, 0);
}

} // namespace

Mat2 cycle_word_matrix(const std::vector<Integer> &a)
{
    Mat2 m = Mat2::identity();
    for (std::size_t k = 0; k < a.size(); ++k) {
        m = m * cycle_factor(a[k], k);
    }
    return m;
}

CocycleReport check_cycle_integral_e2(const std::vector<Integer> &a, const HalfPlanePoint &z, const SeriesParams &p,
                                      CycleForm form)
{
    if (a.size() < 2 || a.size() % 2 != 0) {
        throw std::invalid_argument("cycle words need a_0, ..., a_n with n odd");
    }
    const std::size_t n = a.size() - 1;
    Integer alt = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        alt += (k % 2 == 0) ? a[k] : Integer(-a[k]);
    }

    Mat2 m = cycle_factor(a[0], 0);
    Integer correction = alt;
    bool undefined = false;
    std::string why;
    for (std::size_t k = 1; k <= n; ++k) {
        m = m * cycle_factor(a[k], k);
        if (form == CycleForm::SignProducts) {
            int s = sign(m.c()) * sign(m.d());
            if (s == 0 && !undefined) {
                undefined = true;
                why = "sign(c_k d_k) undefined at k = " + std::to_string(k);
            }
            correction += 3 * s;
        }
    }
    if (form == CycleForm::PartialQuotients) {
        if (a[1] == 0) {
            return not_evaluated("a_1 = 0");
        }
        for (std::size_t k = 2; k <= n; ++k) {
            if (abs(a[k]) < 2) {
                return not_evaluated("|a_" + std::to_string(k) + "| < 2");
            }
        }
        for (std::size_t k = 1; k <= n; ++k) {
            int s = sign(a[k]);
            correction -= 3 * ((k % 2 == 0) ? s : -s);
        }
    }
    if (undefined) {
        return not_evaluated(why);
    }
    if (m.c() == 0) {
        return not_evaluated("c = 0");
    }
    const HalfPlanePoint w(act(m, z.z()));
    std::string note;
    warn_truncation(note, w, p);
    auto integral = path_integral(e2_eval, z, w, p);
    if (!integral.converged) {
        add_note(note, "quadrature did not converge");
    }
    Complex rhs = cocycle_log_term(m.c(), m.d(), z.z()) + to_d(correction);
    return report(integral.value, rhs, p.tol, note);
}

CocycleReport check_cocycle_theta(const ContinuedFraction &cf, const HalfPlanePoint &z, const SeriesParams &p)
{
    if (cf.kind != CfKind::ThetaNeg) {
        throw std::domain_error("check_cocycle_theta needs a theta-type expansion");
    }
    validate(cf);
    const Mat2 m = evaluate(cf_to_word(cf));
    Integer sgn_sum = 0;
    for (const auto &q : cf.quotients) {
        sgn_sum += sign(q);
    }
    const HalfPlanePoint w(act(m, z.z()));
    std::string note;
    if (cf.length() % 2 == 0) {
        note = "n even: outside the odd-length product form";
    }
    warn_truncation(note, w, p);
    auto integral = path_integral(e2_minus_r, z, w, p);
    if (!integral.converged) {
        add_note(note, "quadrature did not converge");
    }
    Complex rhs = cocycle_log_term(m.c(), m.d(), z.z()) - 3.0 * to_d(sgn_sum);
    return report(integral.value, rhs, p.tol, note);
}

CocycleReport check_cocycle_theta4(const ContinuedFraction &cf, const HalfPlanePoint &z, const SeriesParams &p)
{
    if (cf.kind != CfKind::Gamma02Pos) {
        throw std::domain_error("check_cocycle_theta4 needs a gamma02-type expansion");
    }
    validate(cf);
    const Mat2 m = evaluate(cf_to_word(cf));
    Integer odd_sum = 0, alt = 0;
    for (std::size_t k = 1; k <= cf.length(); ++k) {
        const Integer &q = cf.quotients[k - 1];
        if (k % 2 == 1) {
            odd_sum += q;
            alt -= sign(q);
        } else {
            alt += sign(q);
        }
    }
    const HalfPlanePoint w(act(m, z.z()));
    std::string note;
    if (cf.length() > 1 && abs(cf.quotients.back()) == 1) {
        note = "a_n = +-1 with n > 1";
    }
    warn_truncation(note, w, p);
    auto integral = path_integral(e2_minus_l, z, w, p);
    if (!integral.converged) {
        add_note(note, "quadrature did not converge");
    }
    Complex rhs = cocycle_log_term(m.c(), m.d(), z.z()) - 3.0 * to_d(odd_sum) - 3.0 * to_d(alt);
    return report(integral.value, rhs, p.tol, note);
}

CocycleReport check_log_integral_theta(const Mat2 &a, const HalfPlanePoint &z, const SeriesParams &p)
{
    require_member(a, GroupTag::Theta);
    const HalfPlanePoint w(act(a, z.z()));
    std::string note;
    warn_truncation(note, w, p);
    Complex lhs = log_theta(w, p) - log_theta(z, p);
    Complex rhs = pi * I1 / 12.0 * path_integral(e2_minus_r, z, w, p).value;
    return report(lhs, rhs, p.tol, note);
}

CocycleReport check_log_integral_theta4(const Mat2 &a, const HalfPlanePoint &z, const SeriesParams &p)
{
    require_member(a, GroupTag::Gamma02);
    const HalfPlanePoint w(act(a, z.z()));
    std::string note;
    warn_truncation(note, w, p);
    Complex lhs = log_theta4(w, p) - log_theta4(z, p);
    Complex rhs = pi * I1 / 12.0 * path_integral(e2_minus_l, z, w, p).value;
    return report(lhs, rhs, p.tol, note);
}

Complex phi(const Mat2 &a, const HalfPlanePoint &z, const SeriesParams &p)
{
    require_member(a, GroupTag::Gamma02);
    return path_integral(L_eval, z, HalfPlanePoint(act(a, z.z())), p).value;
}

Complex psi(const Mat2 &b, const HalfPlanePoint &z, const SeriesParams &p)
{
    require_member(b, GroupTag::Theta);
    return path_integral(R_eval, z, HalfPlanePoint(act(b, z.z())), p).value;
}

namespace {

Complex hom(GroupTag tag, const Mat2 &a, const HalfPlanePoint &z, const SeriesParams &p)
{
    switch (tag) {
    case GroupTag::Gamma02:
        return phi(a, z, p);
    case GroupTag::Theta:
        return psi(a, z, p);
    case GroupTag::SL2:
        break;
    }
    throw std::domain_error("no weight-2 homomorphism is attached to SL2");
}

} // namespace

CocycleReport check_homomorphism(GroupTag tag, const Mat2 &a, const Mat2 &b, const HalfPlanePoint &z,
                                 const SeriesParams &p)
{
    return report(hom(tag, a * b, z, p), hom(tag, a, z, p) + hom(tag, b, z, p), p.tol);
}

CocycleReport check_basepoint_independence(GroupTag tag, const Mat2 &a, const HalfPlanePoint &z1,
                                           const HalfPlanePoint &z2, const SeriesParams &p)
{
    return report(hom(tag, a, z1, p), hom(tag, a, z2, p), p.tol);
}

CocycleReport check_log_derivative_theta4(const HalfPlanePoint &z, const SeriesParams &p)
{
    const double h = 1e-4;
    const HalfPlanePoint up(z.z() + h), down(z.z() - h);
    Complex lhs = (log_theta4(up, p) - log_theta4(down, p)) / (2.0 * h);
    Complex rhs = pi * I1 / 12.0 * (e2_eval(z, p) - L_eval(z, p));
    return report(lhs, rhs, p.tol);
}

CocycleReport check_doubling(const HalfPlanePoint &z, const SeriesParams &p)
{
    Complex lhs = L_eval(z, p);
    Complex rhs = 2.0 * e2_eval(z, p) - e2_eval(HalfPlanePoint(z.re() / 2, z.im() / 2), p);
    return report(lhs, rhs, p.tol);
}

Mat2 random_group_word(std::mt19937_64 &rng, GroupTag tag, int max_len)
{
    Mat2 gens[2] = {Mat2::T(), Mat2::S()};
    if (tag == GroupTag::Theta) {
        gens[0] = Mat2::T(2);
    } else if (tag == GroupTag::Gamma02) {
        gens[0] = Mat2::T(2);
        gens[1] = Mat2::V();
    }
    std::uniform_int_distribution<int> len(1, std::max(1, max_len)), start(0, 1), e(1, 3), sgn(0, 1);
    const int n = len(rng);
    int g = start(rng);
    Mat2 m = Mat2::identity();
    for (int i = 0; i < n; ++i, g ^= 1) {
        int k = e(rng) * (sgn(rng) ? 1 : -1);
        m = m * gens[g].pow(k);
    }
    return m;
}

} // namespace hardy
