#include "cyclex/render.hpp"

#include "cyclex/textio.hpp"

namespace cyclex {

Json field_json(const Field& F) {
    Json j;
    j["p"] = F.p();
    j["m"] = F.m();
    j["q"] = F.q();
    if (F.m() > 1) {
        Field prime = Field::make(F.p(), 1);
        j["modulus"] = format_poly(Poly::from_coeffs(prime, F.modulus()));
    }
    return j;
}

Json code_info_json(const CyclicCode& C) {
    CyclicCode D = dual(C);
    Json j;
    j["n"] = C.n();
    j["q"] = C.field().q();
    j["g"] = format_poly(C.g());
    j["k"] = C.k();
    j["h"] = format_poly(C.h());
    j["exponent"] = exponent(C);
    j["dual_g"] = format_poly(D.g());
    j["dual_exponent"] = exponent(D);
    return j;
}

Json distribution_json(const CyclicCode& C, const ExponentDistribution& dist) {
    Json j;
    j["n"] = C.n();
    j["q"] = C.field().q();
    j["g"] = format_poly(C.g());
    j["k"] = C.k();
    j["exponent"] = exponent(C);
    j["B"] = dist.in_range;
    j["overflow"] = dist.overflow;
    Json over = Json::object();
    for (const auto& [t, count] : dist.overflow_orders()) over[std::to_string(t)] = count;
    j["overflow_orders"] = over;
    return j;
}

std::string distribution_text(const CyclicCode& C, const ExponentDistribution& dist) {
    std::string out;
    for (std::size_t i = 0; i < dist.in_range.size(); ++i) {
        if (!out.empty()) out.push_back(' ');
        out += "B_" + std::to_string(i + 1) + "=" + std::to_string(dist.in_range[i]);
    }
    out += " (sum " + std::to_string(dist.code_size - 1) + " = " +
           std::to_string(C.field().q()) + "^" + std::to_string(C.k()) + " - 1)";
    if (dist.overflow > 0) {
        out += "\noverflow=" + std::to_string(dist.overflow) + ":";
        for (const auto& [t, count] : dist.overflow_orders())
            out += " B_" + std::to_string(t) + "=" + std::to_string(count);
    }
    return out;
}

Json factorization_json(const Factorization& fac) {
    Json j;
    j["unit"] = fac.unit;
    Json arr = Json::array();
    for (const auto& [p, mult] : fac.factors) {
        Json f;
        f["poly"] = format_poly(p);
        f["multiplicity"] = mult;
        arr.push_back(f);
    }
    j["factors"] = arr;
    return j;
}

std::string factorization_text(const Factorization& fac) {
    std::string out;
    if (fac.unit != 1 || fac.factors.empty()) out = std::to_string(fac.unit);
    for (const auto& [p, mult] : fac.factors) {
        if (!out.empty()) out += " ";
        out += "(" + format_poly(p) + ")";
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    return out;
}

Json verify_report_json(const oracle::VerifyReport& report) {
    Json j;
    j["theorem"] = oracle::theorem_name(report.theorem);
    j["checked"] = report.cases_checked;
    j["skipped"] = report.skipped;
    Json arr = Json::array();
    for (const auto& f : report.failures) {
        Json fj;
        fj["input"] = f.input;
        fj["expected"] = f.expected;
        fj["actual"] = f.actual;
        arr.push_back(fj);
    }
    j["failures"] = arr;
    return j;
}

std::string verify_report_text(const oracle::VerifyReport& report) {
    std::string out = std::string(oracle::theorem_name(report.theorem)) +
                      " checked=" + std::to_string(report.cases_checked) +
                      " skipped=" + std::to_string(report.skipped) +
                      " failures=" + std::to_string(report.failures.size()) +
                      (report.pass() ? " PASS" : " FAIL");
    for (const auto& f : report.failures)
        out += "\n  " + f.input + " expected " + f.expected + " got " + f.actual;
    return out;
}

Json enumerate_row_json(const CyclicCode& C) {
    Json j;
    j["g"] = format_poly(C.g());
    j["k"] = C.k();
    j["exponent"] = exponent(C);
    j["dual_exponent"] = exponent(dual(C));
    return j;
}

std::string enumerate_row_text(const CyclicCode& C) {
    return "g=" + format_poly(C.g()) + " k=" + std::to_string(C.k()) +
           " exp=" + std::to_string(exponent(C)) +
           " dual_exp=" + std::to_string(exponent(dual(C)));
}

} // namespace cyclex
