#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rap/riordan.hpp"
#include "rap/periodicity.hpp"

namespace rap {

/// Which branch of the linear / quadratic / degree-d analysis applies.
enum class CaseTag { Linear1, Linear2, Linear3, QuadA, QuadB1, QuadB2, QuadC, PropD };

/// Outcome within the branch.
enum class Verdict {
    PsumsPeriodic,     ///< V has finite period and S_[k] is eventually periodic.
    PsumsNotPeriodic,  ///< V has finite period but S_[k] is not eventually periodic.
    NonPeriodicV,      ///< V itself has no finite period.
};

std::string to_string(CaseTag tag);
std::string to_string(Verdict verdict);

/// Closed form for S_[k], k >= 2.  Attached whenever p has the shape the
/// formula needs, whether or not the sequence is periodic.
struct ClosedForm {
    enum class Kind {
        Geometric,     ///< coeff * base^k
        ShiftedSine,   ///< 2 a^k (-sqrt 3)^(k-3) sin((k-4) pi / 6)
    };
    Kind kind = Kind::Geometric;
    Cyclo coeff;
    Cyclo base;
    Cyclo a;
    std::string text;

    Cyclo eval(int k) const;
};

struct Classification {
    CaseTag case_tag = CaseTag::Linear1;
    Verdict verdict = Verdict::PsumsNotPeriodic;
    /// Period of V and its preperiod, when V is periodic.
    std::optional<int> mu;
    std::optional<int> matrix_preperiod;
    /// Period the theorem gives for S_[k].  The measured minimal period
    /// divides it.
    std::optional<int> predicted_period;
    std::optional<ClosedForm> predictor;
    std::map<std::string, AnyScalar> parameters;
    /// Set when the decision was made in floating point.
    bool float_verified = false;
    std::string note;
};

/// Options shared by the deciders.
struct ClassifyOptions {
    long max_steps = 0;  ///< 0 selects default_max_steps(d).
    double tol = kDefaultTol;
};

/// p = a + b t.
Classification classify_linear(const Cyclo& a, const Cyclo& b, const ClassifyOptions& opt = {});

/// p = a + b t + c t^2, exact coefficients.
Classification classify_quadratic(const Cyclo& a, const Cyclo& b, const Cyclo& c, const ClassifyOptions& opt = {});

/// Same decision procedure in floating point; used when r is irrational.
Classification classify_quadratic_float(ComplexF a, ComplexF b, ComplexF c, const ClassifyOptions& opt = {});

/// p = a((d-1) - 2t - ... - 2t^d).
PolySpec<Cyclo> prop_d_polynomial(int d, const Cyclo& a);
Classification prop_d_family(int d, const Cyclo& a, const ClassifyOptions& opt = {});

/// Dispatches on degree: linear, quadratic, or the degree-d family when p
/// has that shape.  Throws InvalidInput when no branch covers p.
Classification classify(const PolySpec<Cyclo>& p, const ClassifyOptions& opt = {});

/// S_[k] from the closed form; S_[1] = 0.  Empty when there is none.
std::optional<Cyclo> predict_psums(const Classification& cls, int k);

/// All a with ((xi-1) a (r - xi^2))^mu = 1 and ((xi-1) a (1 - xi^2 r))^mu = 1,
/// xi = zeta_3.  Candidates zeta_mu^s / ((xi-1)(r - xi^2)), s = 1..mu.
std::vector<Cyclo> solve_a_quadC_exact(const Rat& r, int mu);
std::vector<ComplexF> solve_a_quadC_float(double r, int mu, double tol = 1e-9);

/// S_[1..n_terms] and their detected eventual period.
template <class T>
EventualPeriod<T> measure_psum_period(const PolySpec<T>& p, int n_terms, double tol = kDefaultTol) {
    const auto seq = psum_sequence(p, n_terms);
    return detect_eventual_period(std::span<const T>(seq), seq.size(), tol);
}

} // namespace rap
