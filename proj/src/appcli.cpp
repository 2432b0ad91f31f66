#include "excc/appcli.hpp"

#include "excc/charcycle.hpp"
#include "excc/puiseux.hpp"
#include "excc/stalkcalc.hpp"
#include "excc/toruscoh.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace excc {

namespace {

using Json = nlohmann::json;

std::int64_t to_int64(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v < lo || v > hi) {
        throw std::domain_error("result does not fit in the 64-bit JSON output range");
    }
    return v.convert_to<std::int64_t>();
}

Int int_from_json(const Json& j, const char* what) {
    if (!j.is_number_integer()) {
        throw std::invalid_argument(std::string(what) + " must be a JSON integer");
    }
    return Int(j.get<std::int64_t>());
}

std::size_t size_from_json(const Json& j, const char* what) {
    const Int v = int_from_json(j, what);
    if (v < 0) {
        throw std::invalid_argument(std::string(what) + " must be nonnegative");
    }
    return v.convert_to<std::size_t>();
}

Rat rat_from_json(const Json& j, const char* what) {
    if (j.is_number_integer()) {
        return Rat(j.get<std::int64_t>());
    }
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    throw std::invalid_argument(std::string(what) + " must be an integer or a \"p/q\" string");
}

void check_keys(const Json& j, const char* what, const std::set<std::string>& allowed) {
    if (!j.is_object()) {
        throw std::invalid_argument(std::string(what) + " must be a JSON object");
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (allowed.count(it.key()) == 0) {
            throw std::invalid_argument(std::string(what) + ": unknown key \"" + it.key() +
                                        "\"");
        }
    }
}

const Json& require_key(const Json& j, const char* key, const char* what) {
    if (!j.contains(key)) {
        throw std::invalid_argument(std::string(what) + ": missing key \"" + key + "\"");
    }
    return j.at(key);
}

const Json& require_array(const Json& j, const char* what) {
    if (!j.is_array()) {
        throw std::invalid_argument(std::string(what) + " must be a JSON array");
    }
    return j;
}

// Strict positive decimal index, full consumption, no leading zeros.
std::size_t branch_from_key(const std::string& key) {
    if (key.empty() || key.size() > 9 || key[0] == '0') {
        throw std::invalid_argument("invalid branch key \"" + key + "\"");
    }
    std::size_t v = 0;
    for (char c : key) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("invalid branch key \"" + key + "\"");
        }
        v = 10 * v + static_cast<std::size_t>(c - '0');
    }
    return v;
}

Json load_input(const std::string& path) {
    if (path.empty()) {
        throw std::invalid_argument("this subcommand requires --input FILE");
    }
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open input file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return Json::parse(buf.str());
}

std::vector<Rat> parse_rat_list(const std::string& text, const char* what) {
    if (text.empty()) {
        throw std::invalid_argument(std::string(what) + ": empty list");
    }
    std::vector<Rat> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        const std::string tok =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        out.push_back(parse_rational(tok));
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

std::vector<Int> parse_int_list(const std::string& text, const char* what) {
    std::vector<Int> out;
    for (const Rat& r : parse_rat_list(text, what)) {
        if (denominator(r) != 1) {
            throw std::invalid_argument(std::string(what) + ": entries must be integers");
        }
        out.push_back(numerator(r));
    }
    return out;
}

QuasiNormalData quasinormal_from_json(const Json& j) {
    const char* what = "quasinormal input";
    check_keys(j, what, {"l", "ambient_dim", "rank", "ramification", "factors"});
    const std::size_t l = size_from_json(require_key(j, "l", what), "l");
    const std::size_t ambient =
        j.contains("ambient_dim") ? size_from_json(j.at("ambient_dim"), "ambient_dim") : l;
    const Int rank = int_from_json(require_key(j, "rank", what), "rank");

    std::vector<Int> ram(l, Int(1));
    if (j.contains("ramification")) {
        ram.clear();
        for (const Json& e : require_array(j.at("ramification"), "ramification")) {
            ram.push_back(int_from_json(e, "ramification entry"));
        }
    }

    std::vector<WeightedFactor> factors;
    if (j.contains("factors")) {
        for (const Json& fj : require_array(j.at("factors"), "factors")) {
            check_keys(fj, "factor", {"orders", "multiplicity"});
            std::vector<Rat> orders;
            for (const Json& e : require_array(require_key(fj, "orders", "factor"), "orders")) {
                orders.push_back(rat_from_json(e, "pole order"));
            }
            const Int mult = int_from_json(require_key(fj, "multiplicity", "factor"),
                                           "multiplicity");
            factors.push_back({PoleVector(std::move(orders)), mult});
        }
    }
    return QuasiNormalData(l, ambient, std::move(factors), rank, std::move(ram));
}

LagrangianCycle cycle_from_json(const Json& j, const char* what) {
    if (!j.is_object()) {
        throw std::invalid_argument(std::string(what) + " must be a JSON object");
    }
    LagrangianCycle cc;
    for (auto it = j.begin(); it != j.end(); ++it) {
        cc.coefficients[it.key()] = int_from_json(it.value(), "cycle coefficient");
    }
    return cc;
}

IrregularCCData ginsburg_from_json(const Json& j) {
    const char* what = "ginsburg input";
    check_keys(j, what,
               {"pole_branches", "regular_branches", "factors", "regular_cycle", "ramification",
                "g_orders"});

    std::set<std::size_t> poles;
    for (const Json& e : require_array(require_key(j, "pole_branches", what), "pole_branches")) {
        poles.insert(size_from_json(e, "pole branch"));
    }
    std::set<std::size_t> regular;
    for (const Json& e :
         require_array(require_key(j, "regular_branches", what), "regular_branches")) {
        regular.insert(size_from_json(e, "regular branch"));
    }

    std::vector<IrregularFactor> factors;
    if (j.contains("factors")) {
        for (const Json& fj : require_array(j.at("factors"), "factors")) {
            check_keys(fj, "factor", {"orders", "multiplicity"});
            IrregularFactor f;
            const Json& oj = require_key(fj, "orders", "factor");
            if (!oj.is_object()) {
                throw std::invalid_argument("factor orders must be a JSON object");
            }
            for (auto it = oj.begin(); it != oj.end(); ++it) {
                f.orders[branch_from_key(it.key())] = rat_from_json(it.value(), "pole order");
            }
            f.multiplicity = int_from_json(require_key(fj, "multiplicity", "factor"),
                                           "multiplicity");
            factors.push_back(std::move(f));
        }
    }

    const Json& cj = require_key(j, "regular_cycle", what);
    check_keys(cj, "regular_cycle", {"coeffs"});
    const LagrangianCycle cycle = cycle_from_json(require_key(cj, "coeffs", "regular_cycle"),
                                                  "regular_cycle coeffs");

    std::map<std::size_t, Int> ram;
    if (j.contains("ramification")) {
        const Json& rj = j.at("ramification");
        if (!rj.is_object()) {
            throw std::invalid_argument("ramification must be a JSON object");
        }
        for (auto it = rj.begin(); it != rj.end(); ++it) {
            ram[branch_from_key(it.key())] = int_from_json(it.value(), "ramification degree");
        }
    }
    std::map<std::size_t, Int> g_orders;
    if (j.contains("g_orders")) {
        const Json& gj = j.at("g_orders");
        if (!gj.is_object()) {
            throw std::invalid_argument("g_orders must be a JSON object");
        }
        for (auto it = gj.begin(); it != gj.end(); ++it) {
            g_orders[branch_from_key(it.key())] = int_from_json(it.value(), "g pole order");
        }
    }

    return IrregularCCData(std::move(poles), std::move(regular), std::move(factors), cycle,
                           std::move(ram), std::move(g_orders));
}

std::vector<Stratum> strata_from_json(const Json& arr,
                                      const std::set<std::string>& allowed_entry_keys) {
    std::vector<Stratum> out;
    for (const Json& sj : require_array(arr, "strata")) {
        check_keys(sj, "stratum", allowed_entry_keys);
        Stratum s;
        const Json& idj = require_key(sj, "id", "stratum");
        if (!idj.is_string()) {
            throw std::invalid_argument("stratum id must be a string");
        }
        s.id = idj.get<std::string>();
        s.codim = int_from_json(require_key(sj, "codim", "stratum"), "codim");
        s.chi = int_from_json(require_key(sj, "chi", "stratum"), "chi");
        out.push_back(std::move(s));
    }
    return out;
}

std::map<std::string, std::vector<std::string>> closure_from_json(const Json& parent) {
    std::map<std::string, std::vector<std::string>> edges;
    if (!parent.contains("closure")) {
        return edges;
    }
    const Json& j = parent.at("closure");
    if (!j.is_object()) {
        throw std::invalid_argument("closure must be a JSON object");
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::vector<std::string> targets;
        for (const Json& e : require_array(it.value(), "closure edge list")) {
            if (!e.is_string()) {
                throw std::invalid_argument("closure edge target must be a string");
            }
            targets.push_back(e.get<std::string>());
        }
        edges[it.key()] = std::move(targets);
    }
    return edges;
}

Stratification stratification_from_json(const Json& j, const char* what,
                                         const std::set<std::string>& stratum_keys,
                                         const std::set<std::string>& sibling_keys = {}) {
    std::set<std::string> allowed = {"strata", "closure"};
    allowed.insert(sibling_keys.begin(), sibling_keys.end());
    check_keys(j, what, allowed);
    return Stratification(strata_from_json(require_key(j, "strata", what), stratum_keys),
                          closure_from_json(j));
}

std::map<std::string, Int> values_from_json(const Json& j, const char* what) {
    if (!j.is_object()) {
        throw std::invalid_argument(std::string(what) + " must be a JSON object");
    }
    std::map<std::string, Int> values;
    for (auto it = j.begin(); it != j.end(); ++it) {
        values[it.key()] = int_from_json(it.value(), "function value");
    }
    return values;
}

EuTable eu_from_json(const Json& arr, const Stratification& target) {
    EuTable eu;
    for (const Json& ej : require_array(arr, "eu_table")) {
        check_keys(ej, "eu_table entry", {"of", "at", "value"});
        const Json& of = require_key(ej, "of", "eu_table entry");
        const Json& at = require_key(ej, "at", "eu_table entry");
        if (!of.is_string() || !at.is_string()) {
            throw std::invalid_argument("eu_table entry ids must be strings");
        }
        eu.set(of.get<std::string>(), at.get<std::string>(),
               int_from_json(require_key(ej, "value", "eu_table entry"), "eu value"));
    }
    eu.validate(target);
    return eu;
}

// Value of chi(Sol) on one fiber stratum: explicit, or derived from the
// pole orders of the resolved twist along the branches through the stratum.
Int fiber_value(const Json& sj, const Int& rank) {
    const bool has_value = sj.contains("value");
    const bool has_orders = sj.contains("orders");
    if (has_value == has_orders) {
        throw std::invalid_argument(
            "fiber stratum needs exactly one of \"value\" and \"orders\"");
    }
    if (has_value) {
        return int_from_json(sj.at("value"), "fiber value");
    }
    std::vector<Rat> orders;
    for (const Json& e : require_array(sj.at("orders"), "orders")) {
        orders.push_back(rat_from_json(e, "pole order"));
    }
    if (orders.empty()) {
        return rank;
    }
    if (rank < 1) {
        throw std::invalid_argument("orders-derived fiber values require positive rank");
    }
    const std::size_t m = orders.size();
    const QuasiNormalData q(m, m, {{PoleVector(std::move(orders)), rank}}, rank,
                            std::vector<Int>(m, Int(1)));
    std::set<std::size_t> full;
    for (std::size_t i = 1; i <= m; ++i) {
        full.insert(i);
    }
    return local_euler_index(q, full);
}

Json int_map_json(const std::map<std::string, Int>& m) {
    Json o = Json::object();
    for (const auto& [key, value] : m) {
        o[key] = to_int64(value);
    }
    return o;
}

Json dims_json(const std::map<long, Int>& dims) {
    Json o = Json::object();
    for (const auto& [degree, dim] : dims) {
        o[std::to_string(degree)] = to_int64(dim);
    }
    return o;
}

std::string render_table(const std::string& key_header, const std::string& value_header,
                         const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = key_header.size();
    for (const auto& [key, value] : rows) {
        width = std::max(width, key.size());
    }
    std::ostringstream out;
    out << key_header << std::string(width - key_header.size() + 2, ' ') << value_header
        << '\n';
    for (const auto& [key, value] : rows) {
        out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
    }
    return out.str();
}

std::vector<std::pair<std::string, std::string>> map_rows(const std::map<std::string, Int>& m) {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [key, value] : m) {
        rows.emplace_back(key, value.str());
    }
    return rows;
}

std::vector<std::pair<std::string, std::string>> dims_rows(const std::map<long, Int>& dims) {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [degree, dim] : dims) {
        rows.emplace_back(std::to_string(degree), dim.str());
    }
    return rows;
}

std::string error_body(const char* kind, const std::string& message) {
    Json e;
    e["error"] = Json{{"kind", kind}, {"message", message}};
    return e.dump();
}

struct Rendered {
    Json json;
    std::string pretty;
};

}  // namespace

Int index_formula(const IndexInput& inp) {
    if (inp.rank < 0) {
        throw std::invalid_argument("index_formula: negative rank");
    }
    Int total = inp.rank * inp.chi_u;
    for (const auto& [irr, chi] : inp.boundary) {
        if (irr < 0) {
            throw std::invalid_argument("index_formula: negative irregularity");
        }
        total -= irr * chi;
    }
    return total;
}

ResolveOutcome resolve_workflow(const std::string& json_text) {
    const Json j = Json::parse(json_text);
    const char* what = "resolution input";
    check_keys(j, what, {"target", "fibers", "rank", "eu_table"});

    const Stratification target = stratification_from_json(require_key(j, "target", what),
                                                           "target", {"id", "codim", "chi"});
    const Int rank = j.contains("rank") ? int_from_json(j.at("rank"), "rank") : Int(1);

    const Json& fibers_json = require_key(j, "fibers", what);
    if (!fibers_json.is_object()) {
        throw std::invalid_argument("fibers must be a JSON object");
    }
    std::map<std::string, FiberData> fibers;
    for (auto it = fibers_json.begin(); it != fibers_json.end(); ++it) {
        const Json& fj = it.value();
        check_keys(fj, "fiber", {"strata", "closure"});
        const Json& strata_json = require_key(fj, "strata", "fiber");
        Stratification fs(strata_from_json(strata_json, {"id", "codim", "chi", "value", "orders"}),
                          closure_from_json(fj));
        std::map<std::string, Int> values;
        for (const Json& sj : strata_json) {
            values[sj.at("id").get<std::string>()] = fiber_value(sj, rank);
        }
        fibers.emplace(it.key(), FiberData{fs, ConstructibleFunction(fs, std::move(values))});
    }

    ConstructibleFunction chi = pushforward(target, fibers);
    EuTable eu;
    if (j.contains("eu_table")) {
        eu = eu_from_json(j.at("eu_table"), target);
    }
    LagrangianCycle cycle = cc_from_chi(target, eu, chi);
    return {std::move(chi), std::move(cycle)};
}

CliResult run(const std::vector<std::string>& args) {
    CLI::App app{"exact characteristic cycles of exponentially twisted meromorphic connections"};
    app.require_subcommand(1);

    std::string input_path;
    bool pretty = false;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", input_path, "JSON input file");
        sub->add_flag("--pretty", pretty, "human-readable table output instead of JSON");
        return sub;
    };

    std::int64_t torus_l = 0;
    std::string torus_k;
    CLI::App* torus = add_common(
        app.add_subcommand("torus", "cohomology table of a subtorus-union complement"));
    torus->add_option("--l", torus_l, "number of coordinates");
    torus->add_option("--k", torus_k, "comma-separated positive integer orders");

    std::string stalk_k;
    CLI::App* stalk = add_common(
        app.add_subcommand("stalk", "solution stalk data on a normal crossing chart"));
    stalk->add_option("--k", stalk_k, "comma-separated integer pole orders (pure twist)");

    CLI::App* cc_qn = add_common(app.add_subcommand(
        "cc-quasinormal", "characteristic cycle of a quasi-normal-form module"));
    CLI::App* cc_limit = add_common(
        app.add_subcommand("cc-limit", "scaled limit of a non-homogeneous cycle"));
    CLI::App* cc_resolve = add_common(app.add_subcommand(
        "cc-resolve", "characteristic cycle through a resolution description"));
    CLI::App* integrate = add_common(
        app.add_subcommand("integrate", "Euler integral of a constructible function"));
    CLI::App* push = add_common(
        app.add_subcommand("pushforward", "proper pushforward of a constructible function"));
    CLI::App* convert = add_common(app.add_subcommand(
        "cc-convert", "convert between local Euler characteristics and cycles"));

    std::int64_t index_rank = 0;
    std::int64_t index_chi_u = 0;
    std::vector<std::string> index_boundary;
    CLI::App* index = add_common(
        app.add_subcommand("index", "global algebraic de Rham index of a connection"));
    index->add_option("--rank", index_rank, "generic rank");
    index->add_option("--chi-u", index_chi_u, "Euler characteristic of the open part");
    index->add_option("--boundary", index_boundary,
                      "repeatable irr,chi pair for one boundary divisor");

    CLI::App* branches = add_common(
        app.add_subcommand("branch-count", "vanishing Puiseux branches of a plane germ"));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {0, app.help()};
    } catch (const CLI::ParseError& e) {
        return {2, error_body("schema", e.what())};
    }

    try {
        Rendered r;
        if (app.got_subcommand(torus)) {
            std::vector<Int> k;
            if (torus->count("--input") != 0) {
                const Json j = load_input(input_path);
                check_keys(j, "torus input", {"l", "k"});
                for (const Json& e : require_array(require_key(j, "k", "torus input"), "k")) {
                    k.push_back(int_from_json(e, "order"));
                }
                if (j.contains("l") && size_from_json(j.at("l"), "l") != k.size()) {
                    throw std::invalid_argument("torus input: l does not match the orders");
                }
            } else {
                if (torus->count("--l") == 0 || torus->count("--k") == 0) {
                    throw std::invalid_argument("torus: need --input or both --l and --k");
                }
                k = parse_int_list(torus_k, "torus orders");
                if (torus_l < 0 || static_cast<std::size_t>(torus_l) != k.size()) {
                    throw std::invalid_argument("torus: --l does not match the orders");
                }
            }
            const CohomologyTable table = closed_form_dims(TorusProblem(std::move(k)));
            r.json = Json{{"dims", dims_json(table.dims)}};
            r.pretty = render_table("j", "dim", dims_rows(table.dims));
        } else if (app.got_subcommand(stalk)) {
            if (stalk->count("--input") != 0) {
                const QuasiNormalData q = quasinormal_from_json(load_input(input_path));
                const ConstructibleFunction chi = chi_sol_function(q);
                Json irr = Json::object();
                std::vector<std::pair<std::string, std::string>> irr_rows;
                for (std::size_t i = 1; i <= q.l(); ++i) {
                    const Int v = irregularity(q, i);
                    irr[std::to_string(i)] = to_int64(v);
                    irr_rows.emplace_back(std::to_string(i), v.str());
                }
                r.json = Json{{"chi", int_map_json(chi.values())}, {"irregularity", irr}};
                r.pretty = render_table("stratum", "chi", map_rows(chi.values())) + "\n" +
                           render_table("branch", "irregularity", irr_rows);
            } else {
                if (stalk->count("--k") == 0) {
                    throw std::invalid_argument("stalk: need --input or --k");
                }
                const StalkTable table =
                    exponential_stalk_dims(PoleVector(parse_rat_list(stalk_k, "stalk orders")));
                r.json = Json{{"dims", dims_json(table.dims)}, {"euler", to_int64(table.euler)}};
                r.pretty = render_table("j", "dim", dims_rows(table.dims)) + "euler = " +
                           table.euler.str() + "\n";
            }
        } else if (app.got_subcommand(cc_qn)) {
            const LagrangianCycle cycle =
                cc_quasinormal(quasinormal_from_json(load_input(input_path)));
            r.json = Json{{"cycle", int_map_json(cycle.coefficients)}};
            r.pretty = render_table("stratum", "multiplicity", map_rows(cycle.coefficients));
        } else if (app.got_subcommand(cc_limit)) {
            const LagrangianCycle cycle =
                ginsburg_limit(ginsburg_from_json(load_input(input_path)));
            r.json = Json{{"cycle", int_map_json(cycle.coefficients)}};
            r.pretty = render_table("stratum", "multiplicity", map_rows(cycle.coefficients));
        } else if (app.got_subcommand(cc_resolve)) {
            if (input_path.empty()) {
                throw std::invalid_argument("this subcommand requires --input FILE");
            }
            std::ifstream in(input_path);
            if (!in) {
                throw std::invalid_argument("cannot open input file: " + input_path);
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            const ResolveOutcome outcome = resolve_workflow(buf.str());
            r.json = Json{{"chi", int_map_json(outcome.chi.values())},
                          {"cycle", int_map_json(outcome.cycle.coefficients)}};
            r.pretty = render_table("stratum", "chi", map_rows(outcome.chi.values())) + "\n" +
                       render_table("stratum", "multiplicity",
                                    map_rows(outcome.cycle.coefficients));
        } else if (app.got_subcommand(integrate)) {
            const Json j = load_input(input_path);
            check_keys(j, "integrate input", {"strata", "closure", "values"});
            const Stratification s = stratification_from_json(j, "integrate input",
                                                              {"id", "codim", "chi"},
                                                              {"values"});
            const ConstructibleFunction f(
                s, values_from_json(require_key(j, "values", "integrate input"), "values"));
            const Int value = euler_integral(s, f);
            r.json = Json{{"integral", to_int64(value)}};
            r.pretty = "integral = " + value.str() + "\n";
        } else if (app.got_subcommand(push)) {
            const Json j = load_input(input_path);
            check_keys(j, "pushforward input", {"target", "fibers"});
            const Stratification target = stratification_from_json(
                require_key(j, "target", "pushforward input"), "target", {"id", "codim", "chi"});
            const Json& fibers_json = require_key(j, "fibers", "pushforward input");
            if (!fibers_json.is_object()) {
                throw std::invalid_argument("fibers must be a JSON object");
            }
            std::map<std::string, FiberData> fibers;
            for (auto it = fibers_json.begin(); it != fibers_json.end(); ++it) {
                Stratification fs = stratification_from_json(it.value(), "fiber",
                                                             {"id", "codim", "chi"},
                                                             {"values"});
                ConstructibleFunction f(
                    fs, values_from_json(require_key(it.value(), "values", "fiber"), "values"));
                fibers.emplace(it.key(), FiberData{std::move(fs), std::move(f)});
            }
            const ConstructibleFunction out = pushforward(target, fibers);
            r.json = Json{{"values", int_map_json(out.values())}};
            r.pretty = render_table("stratum", "value", map_rows(out.values()));
        } else if (app.got_subcommand(convert)) {
            const Json j = load_input(input_path);
            check_keys(j, "cc-convert input",
                       {"direction", "strata", "closure", "eu_table", "values", "cycle"});
            const Json& dj = require_key(j, "direction", "cc-convert input");
            if (!dj.is_string()) {
                throw std::invalid_argument("direction must be a string");
            }
            const std::string direction = dj.get<std::string>();
            const Stratification s = stratification_from_json(
                Json{{"strata", require_key(j, "strata", "cc-convert input")},
                     {"closure", j.contains("closure") ? j.at("closure") : Json::object()}},
                "cc-convert input", {"id", "codim", "chi"});
            const EuTable eu =
                j.contains("eu_table") ? eu_from_json(j.at("eu_table"), s) : EuTable();
            if (direction == "chi_to_cc") {
                const ConstructibleFunction f(
                    s, values_from_json(require_key(j, "values", "cc-convert input"), "values"));
                const LagrangianCycle cycle = cc_from_chi(s, eu, f);
                r.json = Json{{"cycle", int_map_json(cycle.coefficients)}};
                r.pretty = render_table("stratum", "multiplicity", map_rows(cycle.coefficients));
            } else if (direction == "cc_to_chi") {
                const LagrangianCycle cycle =
                    cycle_from_json(require_key(j, "cycle", "cc-convert input"), "cycle");
                const ConstructibleFunction f = chi_from_cc(s, eu, cycle);
                r.json = Json{{"values", int_map_json(f.values())}};
                r.pretty = render_table("stratum", "chi", map_rows(f.values()));
            } else {
                throw std::invalid_argument(
                    "direction must be \"chi_to_cc\" or \"cc_to_chi\"");
            }
        } else if (app.got_subcommand(index)) {
            IndexInput inp;
            if (index->count("--input") != 0) {
                const Json j = load_input(input_path);
                check_keys(j, "index input", {"rank", "chi_U", "boundary"});
                inp.rank = int_from_json(require_key(j, "rank", "index input"), "rank");
                inp.chi_u = int_from_json(require_key(j, "chi_U", "index input"), "chi_U");
                for (const Json& e :
                     require_array(require_key(j, "boundary", "index input"), "boundary")) {
                    if (!e.is_array() || e.size() != 2) {
                        throw std::invalid_argument(
                            "boundary entries must be [irregularity, chi] pairs");
                    }
                    inp.boundary.emplace_back(int_from_json(e.at(0), "irregularity"),
                                              int_from_json(e.at(1), "chi"));
                }
            } else {
                if (index->count("--rank") == 0 || index->count("--chi-u") == 0) {
                    throw std::invalid_argument("index: need --input or --rank and --chi-u");
                }
                inp.rank = Int(index_rank);
                inp.chi_u = Int(index_chi_u);
                for (const std::string& pair_text : index_boundary) {
                    const std::vector<Int> pair = parse_int_list(pair_text, "boundary pair");
                    if (pair.size() != 2) {
                        throw std::invalid_argument("boundary pairs must be irr,chi");
                    }
                    inp.boundary.emplace_back(pair[0], pair[1]);
                }
            }
            const Int value = index_formula(inp);
            r.json = Json{{"index", to_int64(value)}};
            r.pretty = "index = " + value.str() + "\n";
        } else if (app.got_subcommand(branches)) {
            const Json j = load_input(input_path);
            check_keys(j, "branch-count input", {"terms"});
            BivariatePolynomial p;
            for (const Json& tj :
                 require_array(require_key(j, "terms", "branch-count input"), "terms")) {
                check_keys(tj, "term", {"a", "b", "coeff"});
                const Int a = int_from_json(require_key(tj, "a", "term"), "a");
                const Int b = int_from_json(require_key(tj, "b", "term"), "b");
                p.add_term(static_cast<long>(to_int64(a)), static_cast<long>(to_int64(b)),
                           rat_from_json(require_key(tj, "coeff", "term"), "coeff"));
            }
            const Int count = count_vanishing_branches(p);
            r.json = Json{{"count", to_int64(count)}};
            r.pretty = "count = " + count.str() + "\n";
        }

        if (pretty) {
            // Tables end with a newline of their own; trim it so main's
            // single trailing newline matches the JSON branch.
            std::string text = r.pretty;
            if (!text.empty() && text.back() == '\n') {
                text.pop_back();
            }
            return {0, text};
        }
        return {0, r.json.dump()};
    } catch (const Json::exception& e) {
        return {2, error_body("schema", e.what())};
    } catch (const IntegralityViolation& e) {
        return {3, error_body("domain", e.what())};
    } catch (const GenericityError& e) {
        return {3, error_body("domain", e.what())};
    } catch (const std::domain_error& e) {
        return {3, error_body("domain", e.what())};
    } catch (const std::invalid_argument& e) {
        return {2, error_body("schema", e.what())};
    } catch (const std::logic_error& e) {
        return {3, error_body("internal", e.what())};
    }
}

}  // namespace excc
