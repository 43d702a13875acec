#include "steencob/cli.hpp"

#include "steencob/charclass.hpp"
#include "steencob/cobordism.hpp"
#include "steencob/error.hpp"
#include "steencob/json_io.hpp"
#include "steencob/parser.hpp"
#include "steencob/steenrod.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>

namespace steencob::cli {

namespace {

struct Options {
    bool json = false;
    int max_dim = kDefaultClassifyCeiling;
    std::string cache_dir;
};

struct Result {
    std::string text;
    nlohmann::json data;
};

std::vector<long long> parse_betti(const std::string& s)
{
    std::vector<long long> out;
    std::stringstream in(s);
    std::string item;
    std::size_t column = 1;
    while (std::getline(in, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        const std::string trimmed = first == std::string::npos ? "" : item.substr(first, last - first + 1);
        if (trimmed.empty() || !std::all_of(trimmed.begin(), trimmed.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ParseError("--betti: expected a nonnegative integer at offset " + std::to_string(column), column,
                             {"integer"});
        out.push_back(std::stoll(trimmed));
        column += item.size() + 1;
    }
    if (out.empty())
        throw ParseError("--betti: expected comma-separated integers", 1, {"integer"});
    return out;
}

ManifoldModel manifold_arg(const std::string& s)
{
    return evaluate(parse_manifold(s));
}

Result component_classes(const ManifoldModel& m, bool wu, const char* key)
{
    Result r;
    r.data = {{"components", nlohmann::json::array()}};
    for (const auto& c : m.components()) {
        const TotalClass t = wu ? wu_classes(c) : sw_total(c);
        if (!r.text.empty())
            r.text += '\n';
        r.text += c.label + ": " + key + " = " + to_string(t, c.ring);
        nlohmann::json entry = to_json(c);
        entry.erase("rules");
        entry[key] = to_json(t);
        r.data["components"].push_back(std::move(entry));
    }
    return r;
}

Result cmd_numbers(const ManifoldModel& m)
{
    const SWVector v = all_sw_numbers(m);
    return {to_string(v), to_json(v)};
}

Result cmd_null(const ManifoldModel& m)
{
    const bool yes = is_null_cobordant(m);
    return {yes ? "yes" : "no", {{"dimension", m.dimension()}, {"null_cobordant", yes}}};
}

Result cmd_cobordant(const ManifoldModel& a, const ManifoldModel& b)
{
    const bool yes = are_cobordant(a, b);
    return {yes ? "yes" : "no", {{"dimension", a.dimension()}, {"cobordant", yes}}};
}

Result cmd_classify(const ManifoldModel& m, const Options& opt)
{
    if (m.dimension() > opt.max_dim)
        throw UnsupportedDimension("dimension " + std::to_string(m.dimension()) +
                                   " is above the classification ceiling " + std::to_string(opt.max_dim) +
                                   " (raise it with --max-dim)");
    // the catalog only needs degrees up to the manifold's dimension
    const GeneratorCatalog catalog = opt.cache_dir.empty()
                                         ? GeneratorCatalog(m.dimension())
                                         : GeneratorCatalog::with_cache(m.dimension(), opt.cache_dir);
    const ClassExpression e = catalog.classify(m);
    return {to_string(e), to_json(e)};
}

Result cmd_omega(int n)
{
    const auto parts = nondyadic_partitions(n);
    std::string list;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : parts) {
        list += (list.empty() ? "" : ", ") + to_string(p);
        arr.push_back(p.parts);
    }
    return {"dim \xCE\xA9_" + std::to_string(n) + " = " + std::to_string(parts.size()) +
                "; nondyadic partitions: " + (list.empty() ? "none" : list),
            {{"degree", n}, {"omega_dim", parts.size()}, {"partitions", arr}}};
}

Result cmd_basis(int n)
{
    const auto basis = admissible_basis(n);
    Result r;
    r.data = {{"degree", n}, {"basis", nlohmann::json::array()}};
    for (const auto& m : basis) {
        if (!r.text.empty())
            r.text += '\n';
        r.text += to_string(m);
        r.data["basis"].push_back(m.exponents());
    }
    return r;
}

Result cmd_adem(const std::string& word)
{
    const SteenrodElement e = adem_reduce(parse_steenrod(word));
    return {to_string(e), to_json(e)};
}

Result cmd_bordism_dim(const std::string& betti_arg, int degree)
{
    const auto betti = parse_betti(betti_arg);
    const long long d = weak_integral_bordism_dim(betti, degree);
    return {std::to_string(d), {{"betti", betti}, {"degree", degree}, {"dimension", d}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Steenrod squares, Stiefel-Whitney numbers and unoriented cobordism", "steencob"};
    app.set_version_flag("--version", std::string("steencob ") + STEENCOB_VERSION);
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json, "Print results as JSON");
    app.add_option("--max-dim", opt.max_dim, "Classification ceiling")->check(CLI::NonNegativeNumber);
    app.add_option("--cache-dir", opt.cache_dir, "Directory for cached generator matrices");

    std::string expr, expr2, word, betti;
    int number = 0;
    int degree = 0;

    auto* sw = app.add_subcommand("sw", "Total Stiefel-Whitney class of each component");
    sw->add_option("EXPR", expr, "Manifold expression")->required();
    auto* wu = app.add_subcommand("wu", "Wu classes of each component");
    wu->add_option("EXPR", expr, "Manifold expression")->required();
    auto* numbers = app.add_subcommand("numbers", "All Stiefel-Whitney numbers");
    numbers->add_option("EXPR", expr, "Manifold expression")->required();
    auto* null = app.add_subcommand("null", "Does the manifold bound?");
    null->add_option("EXPR", expr, "Manifold expression")->required();
    auto* cobordant = app.add_subcommand("cobordant", "Are two manifolds cobordant?");
    cobordant->add_option("EXPR", expr, "First manifold")->required();
    cobordant->add_option("EXPR2", expr2, "Second manifold")->required();
    auto* classify_cmd = app.add_subcommand("classify", "Cobordism class as a polynomial in Dold generators");
    classify_cmd->add_option("EXPR", expr, "Manifold expression")->required();
    auto* omega = app.add_subcommand("omega", "Rank of the unoriented cobordism group");
    omega->add_option("N", number, "Degree")->required()->check(CLI::NonNegativeNumber);
    auto* basis = app.add_subcommand("basis", "Admissible Steenrod basis in one degree");
    basis->add_option("N", number, "Degree")->required()->check(CLI::NonNegativeNumber);
    auto* adem = app.add_subcommand("adem", "Reduce a Steenrod word to admissible form");
    adem->add_option("WORD", word, "Steenrod element, e.g. \"Sq^2 Sq^3\"")->required();
    auto* bordism = app.add_subcommand("bordism-dim", "Dimension of sum_{r+s=d} H_r (x) Omega_s");
    bordism->add_option("--betti", betti, "Comma-separated F2 Betti numbers b0,b1,...")->required();
    bordism->add_option("--degree", degree, "Summation degree")->required()->check(CLI::NonNegativeNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        Result r;
        if (sw->parsed())
            r = component_classes(manifold_arg(expr), false, "w");
        else if (wu->parsed())
            r = component_classes(manifold_arg(expr), true, "v");
        else if (numbers->parsed())
            r = cmd_numbers(manifold_arg(expr));
        else if (null->parsed())
            r = cmd_null(manifold_arg(expr));
        else if (cobordant->parsed())
            r = cmd_cobordant(manifold_arg(expr), manifold_arg(expr2));
        else if (classify_cmd->parsed())
            r = cmd_classify(manifold_arg(expr), opt);
        else if (omega->parsed())
            r = cmd_omega(number);
        else if (basis->parsed())
            r = cmd_basis(number);
        else if (adem->parsed())
            r = cmd_adem(word);
        else if (bordism->parsed())
            r = cmd_bordism_dim(betti, degree);

        if (opt.json)
            out << r.data.dump(2) << '\n';
        else
            out << r.text << '\n';
        return kSuccess;
    }
    catch (const ParseError& e) {
        err << "steencob: " << e.what() << '\n';
        return kUsageError;
    }
    catch (const InvariantViolation& e) {
        err << "steencob: internal invariant violated: " << e.what() << '\n';
        return kInternalError;
    }
    catch (const Error& e) {
        err << "steencob: " << e.what() << '\n';
        return kSemanticError;
    }
    catch (const std::exception& e) {
        err << "steencob: internal error: " << e.what() << '\n';
        return kInternalError;
    }
}

}  // namespace steencob::cli
