#include "rap/serialize.hpp"

#include "rap/literal.hpp"

namespace rap {

Json scalar_json(const Cyclo& x, int root_order) { return format_cyclo(x, root_order); }

Json scalar_json(const ComplexF& x, int) { return Json::array({x.real(), x.imag()}); }

int document_order(int base, const std::vector<Cyclo>& values) {
    long n = base;
    for (const auto& x : values)
        if (!x.is_rational()) n = lcm_long(n, x.order());
    return static_cast<int>(n);
}

Json to_json(const PeriodInfo& pi) {
    Json j;
    j["preperiod"] = pi.preperiod;
    j["period"] = pi.period;
    j["is_order"] = pi.is_order();
    return j;
}

namespace {

template <class T>
void put_optional(Json& j, const char* key, const std::optional<T>& v) {
    if (v)
        j[key] = *v;
    else
        j[key] = nullptr;
}

} // namespace

Json to_json(const Classification& cls, int root_order) {
    std::vector<Cyclo> exact;
    for (const auto& [name, v] : cls.parameters)
        if (const auto* c = std::get_if<Cyclo>(&v)) exact.push_back(*c);
    if (cls.predictor) {
        exact.push_back(cls.predictor->coeff);
        exact.push_back(cls.predictor->base);
        exact.push_back(cls.predictor->a);
    }
    const int n = document_order(root_order, exact);

    Json j;
    j["root_order"] = n;
    j["case"] = to_string(cls.case_tag);
    j["verdict"] = to_string(cls.verdict);
    put_optional(j, "mu", cls.mu);
    put_optional(j, "matrix_preperiod", cls.matrix_preperiod);
    put_optional(j, "predicted_period", cls.predicted_period);
    Json params = Json::object();
    for (const auto& [name, v] : cls.parameters)
        params[name] = std::visit([&](const auto& x) { return scalar_json(x, n); }, v);
    j["parameters"] = params;
    if (cls.predictor) {
        Json p;
        p["formula"] = cls.predictor->text;
        if (cls.predictor->kind == ClosedForm::Kind::Geometric) {
            p["kind"] = "geometric";
            p["coeff"] = scalar_json(cls.predictor->coeff, n);
            p["base"] = scalar_json(cls.predictor->base, n);
        } else {
            p["kind"] = "shifted_sine";
            p["a"] = scalar_json(cls.predictor->a, n);
        }
        j["predictor"] = p;
    } else {
        j["predictor"] = nullptr;
    }
    j["float_verified"] = cls.float_verified;
    j["note"] = cls.note;
    return j;
}

Json to_json(const IdentityReport& r) {
    const int n = document_order(document_order(1, r.lhs), r.rhs);
    Json j;
    j["id"] = r.id;
    j["range"] = r.range;
    j["root_order"] = n;
    j["verdict"] = r.pass ? "pass" : "fail";
    j["compared"] = r.lhs.size();
    if (r.first_mismatch) {
        const std::size_t i = *r.first_mismatch;
        j["first_mismatch"] = {{"at", r.labels[i]}, {"lhs", scalar_json(r.lhs[i], n)}, {"rhs", scalar_json(r.rhs[i], n)}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    Json rows = Json::array();
    for (std::size_t i = 0; i < r.lhs.size(); ++i)
        rows.push_back({{"at", r.labels[i]}, {"lhs", scalar_json(r.lhs[i], n)}, {"rhs", scalar_json(r.rhs[i], n)}});
    j["values"] = rows;
    return j;
}

Json to_json(const FmuPoly& f, const std::vector<RealRoot>& roots) {
    Json j;
    j["mu"] = f.mu;
    j["degree"] = f.degree();
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs) coeffs.push_back(c.str());
    j["coeffs"] = coeffs;
    j["polynomial"] = format_rat_poly(f.coeffs);
    Json row = Json::array();
    for (const auto& c : f_mu_integer_row(f.mu)) row.push_back(c.get_str());
    j["integer_row"] = row;
    Json rs = Json::array();
    for (const auto& r : roots) {
        Json x;
        x["approx"] = r.approx;
        x["closed_form"] = r.closed_form.empty() ? Json(nullptr) : Json(r.closed_form);
        x["interval"] = Json::array({r.lo.str(), r.hi.str()});
        rs.push_back(x);
    }
    j["roots"] = rs;
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

} // namespace rap
