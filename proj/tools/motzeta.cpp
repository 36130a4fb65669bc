/*
   Copyright 2026 The motzeta authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// motzeta -- exact calculator for motivic and categorical zeta functions on
// the Lefschetz subring Z[L] of the Grothendieck ring of varieties.
//
// Exit codes: 0 success (and: identity verified), 1 identity failed
// numerically, 2 usage or parse error.

#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "motzeta/expr_parser.hpp"
#include "motzeta/lambda_ops.hpp"
#include "motzeta/render.hpp"
#include "motzeta/transforms.hpp"
#include "motzeta/zeta.hpp"

namespace {

using nlohmann::json;

constexpr const char* kGrammarHelp =
    "Class expressions:\n"
    "  expr    := term (('+' | '-') term)*\n"
    "  term    := factor ('*' factor)*\n"
    "  factor  := '-' factor | primary ('^' uint)?\n"
    "  primary := uint | 'L' | 'pt' | 'A' '^' uint | 'P' '^' uint | '(' expr ')'\n"
    "Precedence: '^' > unary '-' > '*' > binary '+'/'-'.  'A^n' and 'P^n'\n"
    "carry a mandatory exponent; L is the class of the affine line, so\n"
    "A^n = L^n and P^n = 1 + L + ... + L^n.  Start expressions that lead\n"
    "with '-' after a '--' separator: motzeta measure -- '-L + 1'.\n\n"
    "Exit codes: 0 success or identity verified, 1 identity failed,\n"
    "2 usage or parse error.";

struct Common {
    int order = 16;
    bool json_mode = false;
};

void add_common(CLI::App* cmd, Common& common) {
    cmd->add_option("--order", common.order, "series precision N; results are modulo t^(N+1)")
        ->capture_default_str()
        ->check(CLI::Range(0, 4096));
    cmd->add_flag("--json", common.json_mode, "emit one JSON object instead of text");
}

json poly_json(const motzeta::LefschetzPoly& p) {
    json terms = json::array();
    for (const auto& [m, a] : p.terms()) {
        terms.push_back({{"m", m}, {"a", a.get_str()}});
    }
    return terms;
}

json series_json(const motzeta::IntSeries& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs()) {
        coeffs.push_back(c.get_str());
    }
    return {{"coeffs", coeffs}, {"order", f.order()}};
}

json series_json(const motzeta::PolySeries& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs()) {
        coeffs.push_back(poly_json(c));
    }
    return {{"coeffs", coeffs}, {"order", f.order()}};
}

void emit(const Common& common, const std::string& command, const char* key, json value,
          const std::string& text) {
    if (common.json_mode) {
        json out{{"command", command}, {"order", common.order}};
        out[key] = std::move(value);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << text << "\n";
    }
}

// Comma-separated integer list -> series with order len-1.
motzeta::IntSeries parse_coeff_series(const std::string& list) {
    std::vector<mpz_class> coeffs;
    std::size_t start = 0;
    while (start <= list.size()) {
        std::size_t comma = list.find(',', start);
        if (comma == std::string::npos) {
            comma = list.size();
        }
        std::string item = list.substr(start, comma - start);
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        try {
            coeffs.emplace_back(item, 10);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("--coeffs entry '" + item + "' is not an integer");
        }
        start = comma + 1;
        if (comma == list.size()) {
            break;
        }
    }
    return motzeta::IntSeries(std::move(coeffs));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact motivic / categorical zeta function calculator over Z[L]"};
    app.require_subcommand(1);
    app.footer(kGrammarHelp);

    std::function<int()> action;

    // zeta mot|cat EXPR
    auto* zeta_cmd = app.add_subcommand("zeta", "zeta function of a class");
    zeta_cmd->require_subcommand(1);
    for (const bool categorical : {false, true}) {
        auto* sub = zeta_cmd->add_subcommand(
            categorical ? "cat" : "mot",
            categorical ? "categorical zeta function of the integer shadow (a Z-series)"
                        : "motivic zeta function (a Z[L]-series)");
        auto state = std::make_shared<std::pair<Common, std::string>>();
        sub->add_option("expr", state->second, "class expression")->required();
        add_common(sub, state->first);
        sub->callback([&action, state, categorical] {
            action = [state, categorical] {
                const auto cls = motzeta::parse_class(state->second);
                const std::string command = categorical ? "zeta cat" : "zeta mot";
                if (categorical) {
                    const auto z = motzeta::zeta_categorical(cls, state->first.order);
                    emit(state->first, command, "result", series_json(z), motzeta::to_string(z));
                } else {
                    const auto z = motzeta::zeta_motivic(cls, state->first.order);
                    emit(state->first, command, "result", series_json(z), motzeta::to_string(z));
                }
                return 0;
            };
        });
    }

    // sym N EXPR | lambda N EXPR | adams K EXPR
    struct OpSpec {
        const char* name;
        const char* help;
        motzeta::LefschetzPoly (*apply)(const motzeta::LefschetzPoly&, int);
        int min_index;
    };
    const OpSpec op_specs[] = {
        {"sym", "n-th symmetric power of a class", &motzeta::sym_power, 0},
        {"lambda", "n-th exterior power of a class", &motzeta::lambda_power, 0},
        {"adams", "k-th Adams operation applied to a class", &motzeta::adams, 1},
    };
    for (const OpSpec& spec : op_specs) {
        auto* sub = app.add_subcommand(spec.name, spec.help);
        auto state = std::make_shared<std::tuple<Common, int, std::string>>();
        sub->add_option("index", std::get<1>(*state), "operation index")
            ->required()
            ->check(CLI::Range(spec.min_index, 4096));
        sub->add_option("expr", std::get<2>(*state), "class expression")->required();
        add_common(sub, std::get<0>(*state));
        auto apply = spec.apply;
        std::string name = spec.name;
        sub->callback([&action, state, apply, name] {
            action = [state, apply, name] {
                const auto cls = motzeta::parse_class(std::get<2>(*state));
                const auto result = apply(cls, std::get<1>(*state));
                emit(std::get<0>(*state), name, "result", poly_json(result),
                     motzeta::to_string(result));
                return 0;
            };
        });
    }

    // measure EXPR
    {
        auto* sub = app.add_subcommand("measure", "motivic measure (evaluation at L = 1)");
        auto state = std::make_shared<std::pair<Common, std::string>>();
        sub->add_option("expr", state->second, "class expression")->required();
        add_common(sub, state->first);
        sub->callback([&action, state] {
            action = [state] {
                const mpz_class value = motzeta::mu_dg(motzeta::parse_class(state->second));
                emit(state->first, "measure", "result", value.get_str(), value.get_str());
                return 0;
            };
        });
    }

    // transform exp|mobius (--coeffs LIST | --from-zeta EXPR)
    auto* transform_cmd = app.add_subcommand("transform", "exponential / Moebius transform pair");
    transform_cmd->require_subcommand(1);
    for (const bool inverse : {false, true}) {
        auto* sub = transform_cmd->add_subcommand(
            inverse ? "mobius" : "exp",
            inverse ? "Moebius-inverse transform g(t) -> prod g(t^k)^mu(k)"
                    : "exponential transform f(t) -> prod f(t^k)");
        auto state = std::make_shared<std::tuple<Common, std::string, std::string>>();
        auto* source = sub->add_option_group("source", "series to transform");
        source->add_option("--coeffs", std::get<1>(*state),
                           "comma-separated integer coefficients c0,c1,...");
        source->add_option("--from-zeta", std::get<2>(*state),
                           "take the motivic zeta function of this class, specialized at L = 1");
        source->require_option(1);
        add_common(sub, std::get<0>(*state));
        sub->callback([&action, state, inverse] {
            action = [state, inverse] {
                const Common& common = std::get<0>(*state);
                motzeta::IntSeries source =
                    std::get<1>(*state).empty()
                        ? motzeta::specialize_at_one(motzeta::zeta_motivic(
                              motzeta::parse_class(std::get<2>(*state)), common.order))
                        : parse_coeff_series(std::get<1>(*state));
                const auto result = inverse ? motzeta::mobius_transform(source, common.order)
                                            : motzeta::exp_transform(source, common.order);
                emit(common, inverse ? "transform mobius" : "transform exp", "result",
                     series_json(result), motzeta::to_string(result));
                return 0;
            };
        });
    }

    // verify theorem|mult|ppower|point
    auto* verify_cmd = app.add_subcommand("verify", "check one of the zeta-function identities");
    verify_cmd->require_subcommand(1);
    {
        auto* sub = verify_cmd->add_subcommand(
            "theorem", "Z_cat of a class equals the substitution product of measured Z_mot factors");
        auto state = std::make_shared<std::pair<Common, std::string>>();
        sub->add_option("expr", state->second, "class expression")->required();
        add_common(sub, state->first);
        sub->callback([&action, state] {
            action = [state] {
                const auto report = motzeta::verify_theorem(motzeta::parse_class(state->second),
                                                            state->first.order);
                emit(state->first, "verify", "report", report.to_json(), report.to_text());
                return motzeta::report_exit_code(report);
            };
        });
    }
    {
        auto* sub = verify_cmd->add_subcommand(
            "mult", "multiplicativity of both zeta functions on a pair of classes");
        auto state = std::make_shared<std::tuple<Common, std::string, std::string>>();
        sub->add_option("expr1", std::get<1>(*state), "first class")->required();
        sub->add_option("expr2", std::get<2>(*state), "second class")->required();
        add_common(sub, std::get<0>(*state));
        sub->callback([&action, state] {
            action = [state] {
                const Common& common = std::get<0>(*state);
                const auto c = motzeta::parse_class(std::get<1>(*state));
                const auto d = motzeta::parse_class(std::get<2>(*state));
                const auto kap = motzeta::verify_mult_kap(c, d, common.order);
                const auto cat = motzeta::verify_mult_cat(c, d, common.order);
                if (common.json_mode) {
                    json out{{"command", "verify"},
                             {"order", common.order},
                             {"reports", json::array({kap.to_json(), cat.to_json()})}};
                    std::cout << out.dump() << "\n";
                } else {
                    std::cout << motzeta::identity_name(kap.identity) << ": " << kap.to_text()
                              << "\n";
                    std::cout << motzeta::identity_name(cat.identity) << ": " << cat.to_text()
                              << "\n";
                }
                return std::max(motzeta::report_exit_code(kap), motzeta::report_exit_code(cat));
            };
        });
    }
    {
        auto* sub = verify_cmd->add_subcommand(
            "ppower", "projective-bundle power law Z_cat(c * P^n) = Z_cat(c)^(n+1)");
        auto state = std::make_shared<std::tuple<Common, std::string, int>>();
        sub->add_option("expr", std::get<1>(*state), "class expression")->required();
        sub->add_option("n", std::get<2>(*state), "projective dimension")
            ->required()
            ->check(CLI::Range(0, 4096));
        add_common(sub, std::get<0>(*state));
        sub->callback([&action, state] {
            action = [state] {
                const auto report =
                    motzeta::verify_pn_power(motzeta::parse_class(std::get<1>(*state)),
                                             std::get<2>(*state), std::get<0>(*state).order);
                emit(std::get<0>(*state), "verify", "report", report.to_json(), report.to_text());
                return motzeta::report_exit_code(report);
            };
        });
    }
    {
        auto* sub = verify_cmd->add_subcommand(
            "point", "Z_cat(pt) against the partition-number dynamic program");
        auto state = std::make_shared<Common>();
        add_common(sub, *state);
        sub->callback([&action, state] {
            action = [state] {
                const auto report = motzeta::verify_point_partition(state->order);
                emit(*state, "verify", "report", report.to_json(), report.to_text());
                return motzeta::report_exit_code(report);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return action();
    } catch (const motzeta::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
