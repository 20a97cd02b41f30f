#include "rap/classify.hpp"

#include <numeric>

#include "rap/literal.hpp"

namespace rap {

namespace {

const Cyclo& xi3() {
    static const Cyclo x = Cyclo::root(3);
    return x;
}

long steps_for(const ClassifyOptions& opt, int d) { return opt.max_steps > 0 ? opt.max_steps : default_max_steps(d); }

// Period of V, or nullopt when V never repeats within the budget.
template <class T>
std::optional<PeriodInfo> try_matrix_period(const PolySpec<T>& p, const ClassifyOptions& opt) {
    try {
        return matrix_period(circulant_of(p), steps_for(opt, p.degree()), opt.tol);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::PeriodNotFound) return std::nullopt;
        throw;
    }
}

void record_mu(Classification& cls, const std::optional<PeriodInfo>& pi) {
    if (!pi) return;
    cls.mu = pi->period;
    cls.matrix_preperiod = pi->preperiod;
}

ClosedForm geometric(const Cyclo& coeff, const Cyclo& base, std::string text) {
    ClosedForm f;
    f.kind = ClosedForm::Kind::Geometric;
    f.coeff = coeff;
    f.base = base;
    f.text = std::move(text);
    return f;
}

// sqrt(3) in Q(zeta_12).
Cyclo sqrt3() { return Cyclo::root(12, 1) + Cyclo::root(12, 11); }

} // namespace

std::string to_string(CaseTag tag) {
    switch (tag) {
    case CaseTag::Linear1: return "Linear1";
    case CaseTag::Linear2: return "Linear2";
    case CaseTag::Linear3: return "Linear3";
    case CaseTag::QuadA: return "QuadA";
    case CaseTag::QuadB1: return "QuadB1";
    case CaseTag::QuadB2: return "QuadB2";
    case CaseTag::QuadC: return "QuadC";
    case CaseTag::PropD: return "PropD";
    }
    return "unknown";
}

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::PsumsPeriodic: return "PsumsPeriodic";
    case Verdict::PsumsNotPeriodic: return "PsumsNotPeriodic";
    case Verdict::NonPeriodicV: return "NonPeriodicV";
    }
    return "unknown";
}

Cyclo ClosedForm::eval(int k) const {
    if (kind == Kind::Geometric) return coeff * base.pow(k);
    // sin(m pi / 6) = (z^m - z^-m) / (2i) with z = zeta_12.
    const long m = k - 4;
    const Cyclo sin_m = imag_part(Cyclo::root(12, m));
    return Cyclo(2) * a.pow(k) * (-sqrt3()).pow(k - 3) * sin_m;
}

Classification classify_linear(const Cyclo& a, const Cyclo& b, const ClassifyOptions& opt) {
    if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::InvalidInput, "linear case needs a*b != 0");
    Classification cls;
    cls.parameters = {{"a", a}, {"b", b}};
    const PolySpec<Cyclo> p({a, b});
    const auto pi = try_matrix_period(p, opt);
    record_mu(cls, pi);
    if (a == b) {
        cls.case_tag = CaseTag::Linear1;
    } else if (a == -b) {
        cls.case_tag = CaseTag::Linear2;
    } else {
        cls.case_tag = CaseTag::Linear3;
    }
    // The closed form holds for every b = -a; it is periodic only when V is.
    const Cyclo base = Cyclo(-2) * a;
    if (cls.case_tag == CaseTag::Linear2) cls.predictor = geometric(Cyclo(Rat(1, 4)), base, "a^2 (-2a)^(k-2)");
    if (!pi) {
        cls.verdict = Verdict::NonPeriodicV;
        cls.note = "V has no finite period";
        return cls;
    }
    if (cls.case_tag != CaseTag::Linear2) {
        cls.verdict = Verdict::PsumsNotPeriodic;
        cls.note = "only b = -a gives eventually periodic partial sums";
        return cls;
    }
    cls.verdict = Verdict::PsumsPeriodic;
    cls.predicted_period = is_root_of_unity(base).value_or(*cls.mu);
    return cls;
}

Classification classify_quadratic(const Cyclo& a, const Cyclo& b, const Cyclo& c, const ClassifyOptions& opt) {
    if (a.is_zero() || c.is_zero()) throw Error(ErrorKind::InvalidInput, "quadratic case needs a*c != 0");
    const Cyclo& xi = xi3();
    const Cyclo xi2 = xi * xi;
    const Cyclo l1 = a + b + c;
    const Cyclo l2 = a * xi2 + b * xi + c;
    const Cyclo l3 = a * xi + b * xi2 + c;
    if (l1.is_zero() && l2.is_zero() && l3.is_zero())
        throw Error(ErrorKind::InternalInconsistency, "all three eigenvalues vanish although c != 0");

    Classification cls;
    cls.parameters = {{"a", a}, {"b", b}, {"c", c}};
    const PolySpec<Cyclo> p({a, b, c});
    const auto pi = try_matrix_period(p, opt);
    record_mu(cls, pi);

    if (!l1.is_zero()) {
        cls.case_tag = CaseTag::QuadA;
        const bool shape = b == Cyclo(-2) * a && c == Cyclo(-2) * a;
        if (!pi) {
            cls.verdict = Verdict::NonPeriodicV;
            cls.note = "V has no finite period";
        } else if (!shape) {
            cls.verdict = Verdict::PsumsNotPeriodic;
            cls.note = "lambda_1 != 0 and p is not a(1 - 2t - 2t^2)";
        } else if (*cls.mu % 6 != 0) {
            cls.verdict = Verdict::PsumsNotPeriodic;
            cls.note = "6 does not divide mu";
        } else {
            cls.verdict = Verdict::PsumsPeriodic;
            cls.predicted_period = cls.mu;
        }
        return cls;
    }

    if (l2.is_zero() || l3.is_zero()) {
        const bool b1 = l2.is_zero();
        cls.case_tag = b1 ? CaseTag::QuadB1 : CaseTag::QuadB2;
        const Cyclo base = Cyclo(3) * a * (b1 ? xi : xi2);
        if (b1)
            cls.predictor = geometric((xi - Cyclo(1)) * (Cyclo(9) * xi).inv(), base, "(3a xi)^k (xi - 1) / (9 xi)");
        else
            cls.predictor = geometric((Cyclo(1) - xi) * Cyclo(Rat(1, 9)), base, "(3a xi^2)^k (1 - xi) / 9");
        if (!pi) {
            cls.verdict = Verdict::NonPeriodicV;
            cls.note = "3a xi" + std::string(b1 ? "" : "^2") + " is not a root of unity";
            return cls;
        }
        cls.verdict = Verdict::PsumsPeriodic;
        cls.predicted_period = is_root_of_unity(base).value_or(*cls.mu);
        return cls;
    }

    cls.case_tag = CaseTag::QuadC;
    const Cyclo r = b / a;
    cls.parameters["r"] = r;
    if (r.is_zero()) {
        ClosedForm f;
        f.kind = ClosedForm::Kind::ShiftedSine;
        f.a = a;
        f.text = "2 a^k (-sqrt 3)^(k-3) sin((k-4) pi/6)";
        cls.predictor = f;
    }
    if (!pi) {
        cls.verdict = Verdict::NonPeriodicV;
        cls.note = "V has no finite period";
        return cls;
    }
    if (!(r == r.conj())) {
        cls.verdict = Verdict::PsumsNotPeriodic;
        cls.note = "b/a is not real";
        return cls;
    }
    // With V periodic both nonzero eigenvalues are mu-th roots of unity, which
    // is exactly the pair of conditions on a and r; check it anyway.
    const int mu = *cls.mu;
    const Cyclo e1 = ((xi - Cyclo(1)) * a * (r - xi2)).pow(mu);
    const Cyclo e2 = ((xi - Cyclo(1)) * a * (Cyclo(1) - xi2 * r)).pow(mu);
    if (!(e1 == Cyclo(1)) || !(e2 == Cyclo(1)))
        throw Error(ErrorKind::InternalInconsistency, "periodic V but the eigenvalue system fails");
    cls.verdict = Verdict::PsumsPeriodic;
    cls.predicted_period = mu;
    return cls;
}

Classification classify_quadratic_float(ComplexF a, ComplexF b, ComplexF c, const ClassifyOptions& opt) {
    const double tol = opt.tol;
    if (std::abs(a) <= tol || std::abs(c) <= tol) throw Error(ErrorKind::InvalidInput, "quadratic case needs a*c != 0");
    const ComplexF xi = std::polar(1.0, 2 * M_PI / 3);
    const ComplexF xi2 = xi * xi;
    const ComplexF l1 = a + b + c, l2 = a * xi2 + b * xi + c, l3 = a * xi + b * xi2 + c;
    auto zero = [&](ComplexF z) { return std::abs(z) <= 1e3 * tol; };
    Classification cls;
    cls.float_verified = true;
    cls.parameters = {{"a", a}, {"b", b}, {"c", c}};
    const PolySpec<ComplexF> p({a, b, c});
    const auto pi = try_matrix_period(p, opt);
    record_mu(cls, pi);
    if (!zero(l1)) {
        cls.case_tag = CaseTag::QuadA;
        const bool shape = zero(b + 2.0 * a) && zero(c + 2.0 * a);
        if (!pi) {
            cls.verdict = Verdict::NonPeriodicV;
        } else if (!shape || *cls.mu % 6 != 0) {
            cls.verdict = Verdict::PsumsNotPeriodic;
        } else {
            cls.verdict = Verdict::PsumsPeriodic;
            cls.predicted_period = cls.mu;
        }
        return cls;
    }
    if (zero(l2) || zero(l3)) {
        cls.case_tag = zero(l2) ? CaseTag::QuadB1 : CaseTag::QuadB2;
        cls.verdict = pi ? Verdict::PsumsPeriodic : Verdict::NonPeriodicV;
        if (pi) cls.predicted_period = cls.mu;
        return cls;
    }
    cls.case_tag = CaseTag::QuadC;
    const ComplexF r = b / a;
    cls.parameters["r"] = r;
    if (!pi) {
        cls.verdict = Verdict::NonPeriodicV;
    } else if (std::abs(r.imag()) > 1e3 * tol) {
        cls.verdict = Verdict::PsumsNotPeriodic;
        cls.note = "b/a is not real";
    } else {
        cls.verdict = Verdict::PsumsPeriodic;
        cls.predicted_period = cls.mu;
    }
    return cls;
}

PolySpec<Cyclo> prop_d_polynomial(int d, const Cyclo& a) {
    if (d < 2) throw Error(ErrorKind::InvalidInput, "the degree-d family needs d >= 2");
    std::vector<Cyclo> coeffs{a * Cyclo(d - 1)};
    for (int i = 1; i <= d; ++i) coeffs.push_back(a * Cyclo(-2));
    return PolySpec<Cyclo>(std::move(coeffs));
}

Classification prop_d_family(int d, const Cyclo& a, const ClassifyOptions& opt) {
    const PolySpec<Cyclo> p = prop_d_polynomial(d, a);
    Classification cls;
    cls.case_tag = CaseTag::PropD;
    cls.parameters = {{"a", a}, {"d", Cyclo(d)}};
    const auto k = is_root_of_unity(Cyclo(d + 1) * a);
    if (!k) {
        cls.verdict = Verdict::NonPeriodicV;
        cls.note = "(d+1)a is not a root of unity";
        return cls;
    }
    record_mu(cls, try_matrix_period(p, opt));
    cls.verdict = Verdict::PsumsPeriodic;
    cls.predicted_period = static_cast<int>(std::lcm(static_cast<long>(*k), d % 2 ? d + 1L : 2L * (d + 1)));
    cls.note = "(d+1)a has order " + std::to_string(*k);
    return cls;
}

Classification classify(const PolySpec<Cyclo>& p, const ClassifyOptions& opt) {
    const auto& a = p.coeffs();
    switch (p.degree()) {
    case 1: return classify_linear(a[0], a[1], opt);
    case 2: return classify_quadratic(a[0], a[1], a[2], opt);
    default: break;
    }
    if (p.degree() >= 3) {
        const Cyclo s = a[1] * Cyclo(Rat(-1, 2));
        bool shape = a[0] == s * Cyclo(p.degree() - 1);
        for (int i = 2; i <= p.degree() && shape; ++i) shape = a[i] == a[1];
        if (shape) return prop_d_family(p.degree(), s, opt);
    }
    throw Error(ErrorKind::InvalidInput, "no classification covers this polynomial (degree " +
                                             std::to_string(p.degree()) +
                                             "); supported: degree 1, degree 2, and a((d-1) - 2t - ... - 2t^d)");
}

std::optional<Cyclo> predict_psums(const Classification& cls, int k) {
    if (k < 1) throw Error(ErrorKind::InvalidInput, "k must be positive");
    if (!cls.predictor) return std::nullopt;
    if (k == 1) return Cyclo();
    return cls.predictor->eval(k);
}

std::vector<Cyclo> solve_a_quadC_exact(const Rat& r, int mu) {
    if (mu < 1) throw Error(ErrorKind::InvalidInput, "mu must be positive");
    const Cyclo& xi = xi3();
    const Cyclo xi2 = xi * xi;
    const Cyclo one(1);
    const Cyclo denom = (xi - one) * (Cyclo(r) - xi2);
    const Cyclo denom_inv = denom.inv();
    std::vector<Cyclo> out;
    for (int s = 1; s <= mu; ++s) {
        const Cyclo a = Cyclo::root(mu, s) * denom_inv;
        if (((xi - one) * a * (one - xi2 * Cyclo(r))).pow(mu) == one) out.push_back(a);
    }
    return out;
}

std::vector<ComplexF> solve_a_quadC_float(double r, int mu, double tol) {
    if (mu < 1) throw Error(ErrorKind::InvalidInput, "mu must be positive");
    const ComplexF xi = std::polar(1.0, 2 * M_PI / 3);
    const ComplexF xi2 = xi * xi;
    const ComplexF denom = (xi - 1.0) * (r - xi2);
    std::vector<ComplexF> out;
    for (int s = 1; s <= mu; ++s) {
        const ComplexF a = std::polar(1.0, 2 * M_PI * s / mu) / denom;
        if (std::abs(std::pow((xi - 1.0) * a * (1.0 - xi2 * r), mu) - 1.0) <= tol * mu * 10) out.push_back(a);
    }
    return out;
}

} // namespace rap
