#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cyclex/render.hpp"
#include "cyclex/textio.hpp"

using namespace cyclex;

namespace {

Budget make_budget(std::uint64_t cli_value, bool cli_set) {
    Budget b;
    if (const char* env = std::getenv("CYCLEX_BUDGET")) {
        try {
            b.codewords = std::stoull(env);
        } catch (...) {
            fail(Errc::ParseError, "CYCLEX_BUDGET is not a number");
        }
    }
    if (cli_set) b.codewords = cli_value;
    return b;
}

void emit(const Json& j, const std::string& text, bool as_json) {
    if (as_json)
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computation of cyclic-code exponents over GF(q)"};
    app.require_subcommand(1);

    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");
    std::uint64_t budget_value = 0;
    auto* budget_opt =
        app.add_option("--budget", budget_value, "codeword enumeration cap");

    std::string field_arg, g_arg, a_arg, c_arg, poly1, poly2;
    std::uint32_t n_arg = 0, nmax_arg = 0;

    auto* field_cmd = app.add_subcommand("field", "field inspection");
    auto* field_info = field_cmd->add_subcommand("info", "describe GF(q)");
    field_info->add_option("--q", field_arg, "field, e.g. 2, 9, 2^4")->required();

    auto* poly_cmd = app.add_subcommand("poly", "polynomial operations");
    CLI::App* poly_ord = poly_cmd->add_subcommand("ord", "order (period) of a polynomial");
    CLI::App* poly_factor = poly_cmd->add_subcommand("factor", "factor into irreducibles");
    CLI::App* poly_recip = poly_cmd->add_subcommand("reciprocal", "reciprocal polynomial");
    CLI::App* poly_gcd = poly_cmd->add_subcommand("gcd", "monic gcd of two polynomials");
    for (CLI::App* sub : {poly_ord, poly_factor, poly_recip, poly_gcd}) {
        sub->add_option("--q", field_arg, "field")->required();
        sub->add_option("poly1", poly1, "polynomial, e.g. \"1+x^2\" or \"1,0,1\"")->required();
    }
    poly_gcd->add_option("poly2", poly2, "second polynomial")->required();

    auto* code_cmd = app.add_subcommand("code", "cyclic code operations");
    CLI::App* code_info = code_cmd->add_subcommand("info", "generator, dual, exponents");
    CLI::App* code_exp = code_cmd->add_subcommand("exp", "exponent of the code");
    CLI::App* code_dual = code_cmd->add_subcommand("dual", "dual code generator");
    CLI::App* code_dist = code_cmd->add_subcommand("dist", "exponent distribution");
    CLI::App* code_encode = code_cmd->add_subcommand("encode", "codeword of an information polynomial");
    CLI::App* code_member = code_cmd->add_subcommand("member", "codeword membership");
    for (CLI::App* sub : {code_info, code_exp, code_dual, code_dist, code_encode, code_member}) {
        sub->add_option("--q", field_arg, "field")->required();
        sub->add_option("--n", n_arg, "code length")->required();
        sub->add_option("--g", g_arg, "generator polynomial")->required();
    }
    code_encode->add_option("--a", a_arg, "information polynomial")->required();
    code_member->add_option("--c", c_arg, "candidate codeword polynomial")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "all cyclic codes of length n");
    enum_cmd->add_option("--q", field_arg, "field")->required();
    enum_cmd->add_option("--n", n_arg, "code length")->required();

    auto* verify_cmd = app.add_subcommand("verify", "sweep the theorem checks");
    verify_cmd->add_option("--q", field_arg, "field")->required();
    verify_cmd->add_option("--nmax", nmax_arg, "largest code length")->required();

    for (CLI::App* sub :
         {field_cmd, field_info, poly_cmd, poly_ord, poly_factor, poly_recip, poly_gcd,
          code_cmd, code_info, code_exp, code_dual, code_dist, code_encode, code_member,
          enum_cmd, verify_cmd})
        sub->fallthrough();
    for (CLI::App* sub : {field_cmd, poly_cmd, code_cmd}) sub->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Budget budget = make_budget(budget_value, budget_opt->count() > 0);
        Field F = parse_field(field_arg);

        if (field_info->parsed()) {
            Json j = field_json(F);
            std::string text = "p=" + std::to_string(F.p()) + " m=" + std::to_string(F.m()) +
                               " q=" + std::to_string(F.q());
            if (j.contains("modulus")) text += " modulus=" + j["modulus"].get<std::string>();
            emit(j, text, as_json);
        } else if (poly_ord->parsed()) {
            std::uint64_t e = order(parse_poly(F, poly1));
            Json j;
            j["q"] = F.q();
            j["poly"] = format_poly(parse_poly(F, poly1));
            j["ord"] = e;
            emit(j, std::to_string(e), as_json);
        } else if (poly_factor->parsed()) {
            Factorization fac = factor(parse_poly(F, poly1));
            emit(factorization_json(fac), factorization_text(fac), as_json);
        } else if (poly_recip->parsed()) {
            Poly r = reciprocal(parse_poly(F, poly1));
            Json j;
            j["result"] = format_poly(r);
            emit(j, format_poly(r), as_json);
        } else if (poly_gcd->parsed()) {
            Poly g = gcd(parse_poly(F, poly1), parse_poly(F, poly2));
            Json j;
            j["result"] = format_poly(g);
            emit(j, format_poly(g), as_json);
        } else if (code_info->parsed() || code_exp->parsed() || code_dual->parsed() ||
                   code_dist->parsed() || code_encode->parsed() || code_member->parsed()) {
            CyclicCode C = CyclicCode::make(n_arg, F, parse_poly(F, g_arg));
            if (code_info->parsed()) {
                Json j = code_info_json(C);
                std::string text;
                for (const auto& [key, value] : j.items()) {
                    if (!text.empty()) text += "\n";
                    text += key + " = " +
                            (value.is_string() ? value.get<std::string>() : value.dump());
                }
                emit(j, text, as_json);
            } else if (code_exp->parsed()) {
                std::uint64_t e = exponent(C);
                Json j;
                j["exponent"] = e;
                emit(j, std::to_string(e), as_json);
            } else if (code_dual->parsed()) {
                CyclicCode D = dual(C);
                Json j;
                j["dual_g"] = format_poly(D.g());
                j["dual_k"] = D.k();
                j["dual_exponent"] = exponent(D);
                emit(j, format_poly(D.g()), as_json);
            } else if (code_dist->parsed()) {
                ExponentDistribution dist = exponent_distribution(C, budget);
                emit(distribution_json(C, dist), distribution_text(C, dist), as_json);
            } else if (code_encode->parsed()) {
                Poly c = encode(C, parse_poly(F, a_arg));
                std::string vec;
                for (std::uint32_t i = 0; i < C.n(); ++i) {
                    if (i > 0) vec += ",";
                    vec += std::to_string(c.coeff(i));
                }
                Json j;
                j["codeword"] = format_poly(c);
                j["vector"] = vec;
                emit(j, format_poly(c), as_json);
            } else {
                bool member = contains(C, parse_poly(F, c_arg));
                Json j;
                j["member"] = member;
                emit(j, member ? "true" : "false", as_json);
            }
        } else if (enum_cmd->parsed()) {
            std::vector<CyclicCode> codes = enumerate_codes(n_arg, F, budget);
            if (as_json) {
                Json arr = Json::array();
                for (const CyclicCode& C : codes) arr.push_back(enumerate_row_json(C));
                std::cout << arr.dump() << "\n";
            } else {
                for (const CyclicCode& C : codes) std::cout << enumerate_row_text(C) << "\n";
            }
        } else if (verify_cmd->parsed()) {
            auto reports = oracle::run_verification(F, nmax_arg, budget);
            bool ok = true;
            if (as_json) {
                Json arr = Json::array();
                for (const auto& r : reports) arr.push_back(verify_report_json(r));
                std::cout << arr.dump() << "\n";
            }
            for (const auto& r : reports) {
                if (!as_json) std::cout << verify_report_text(r) << "\n";
                ok = ok && r.pass();
            }
            return ok ? 0 : 3;
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
