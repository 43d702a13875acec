#include "steencob/cobordism.hpp"

#include "steencob/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace steencob {

std::vector<Partition> nondyadic_partitions(int n)
{
    std::vector<Partition> out;
    for (auto& p : partitions(n))
        if (std::none_of(p.parts.begin(), p.parts.end(), is_dyadic_part))
            out.push_back(std::move(p));
    return out;
}

long long omega_dim(int n)
{
    return static_cast<long long>(nondyadic_partitions(n).size());
}

bool is_null_cobordant(const ManifoldModel& m)
{
    return all_sw_numbers(m).is_zero();
}

bool are_cobordant(const ManifoldModel& a, const ManifoldModel& b)
{
    if (a.dimension() != b.dimension())
        throw InvalidArgument("cobordism of manifolds of dimensions " + std::to_string(a.dimension()) + " and " +
                              std::to_string(b.dimension()));
    return all_sw_numbers(a) == all_sw_numbers(b);
}

ManifoldModel dold_generator(int i)
{
    if (i < 2 || is_dyadic_part(i))
        throw PreconditionError("no generator x_" + std::to_string(i) + ": degrees are i >= 2 with i != 2^k - 1");
    if (i % 2 == 0)
        return rp(i);
    int r = 0;
    int odd = i + 1;
    while (odd % 2 == 0) {
        odd /= 2;
        ++r;
    }
    const int s = (odd - 1) / 2;
    return dold((1 << r) - 1, s << r);
}

void ClassExpression::toggle(const Partition& monomial)
{
    if (monomial.sum() != dimension_)
        throw InvalidArgument("monomial " + to_string(monomial) + " has the wrong degree");
    auto [it, inserted] = monomials_.insert(monomial);
    if (!inserted)
        monomials_.erase(it);
}

ClassExpression& ClassExpression::operator+=(const ClassExpression& rhs)
{
    if (rhs.dimension_ != dimension_)
        throw InvalidArgument("adding cobordism classes of different dimensions");
    for (const auto& m : rhs.monomials_)
        toggle(m);
    return *this;
}

ClassExpression multiply(const ClassExpression& a, const ClassExpression& b)
{
    ClassExpression out(a.dimension() + b.dimension());
    for (const auto& x : a.monomials())
        for (const auto& y : b.monomials()) {
            std::vector<int> parts = x.parts;
            parts.insert(parts.end(), y.parts.begin(), y.parts.end());
            out.toggle(make_partition(std::move(parts)));
        }
    return out;
}

ManifoldModel realize(const Partition& monomial)
{
    ManifoldModel out = point();
    bool first = true;
    for (int i : monomial.parts) {
        out = first ? dold_generator(i) : product(out, dold_generator(i));
        first = false;
    }
    return out;
}

ManifoldModel realize(const ClassExpression& e)
{
    if (e.is_zero())
        throw InvalidArgument("the zero class has no connected representative; use a boundary such as S(n)");
    std::optional<ManifoldModel> out;
    for (const auto& m : e.monomials())
        out = out ? disjoint_union(*out, realize(m)) : realize(m);
    return *out;
}

std::string to_string(const ClassExpression& e)
{
    if (e.is_zero())
        return "0";
    std::string s;
    for (const auto& m : e.monomials()) {
        if (!s.empty())
            s += " + ";
        if (m.parts.empty()) {
            s += "1";
            continue;
        }
        std::string term;
        for (std::size_t k = 0; k < m.parts.size();) {
            std::size_t run = k;
            while (run < m.parts.size() && m.parts[run] == m.parts[k])
                ++run;
            if (!term.empty())
                term += ' ';
            term += "x" + std::to_string(m.parts[k]);
            if (run - k > 1)
                term += "^" + std::to_string(run - k);
            k = run;
        }
        s += term;
    }
    return s;
}

GeneratorCatalog::GeneratorCatalog(int max_dimension, std::map<int, Degree> degrees)
    : max_dimension_(max_dimension), degrees_(std::move(degrees))
{
}

GeneratorCatalog::GeneratorCatalog(int max_dimension) : max_dimension_(max_dimension)
{
    if (max_dimension < 0)
        throw InvalidArgument("catalog ceiling must be nonnegative");
    for (int n = 0; n <= max_dimension; ++n) {
        Degree d = build_degree(n);
        validate(n, d);
        degrees_.emplace(n, std::move(d));
    }
}

GeneratorCatalog::Degree GeneratorCatalog::build_degree(int n)
{
    Degree d;
    d.monomials = nondyadic_partitions(n);
    const auto parts = partitions(n);
    d.matrix = F2Matrix(d.monomials.size(), parts.size());
    for (std::size_t r = 0; r < d.monomials.size(); ++r) {
        const SWVector v = all_sw_numbers(realize(d.monomials[r]));
        for (std::size_t c = 0; c < parts.size(); ++c)
            d.matrix.set(r, c, v.entries()[c].second);
    }
    return d;
}

void GeneratorCatalog::validate(int n, const Degree& d)
{
    if (d.monomials != nondyadic_partitions(n))
        throw InvariantViolation("generator catalog: wrong monomial list in degree " + std::to_string(n));
    if (d.matrix.rows() != d.monomials.size() || d.matrix.cols() != partitions(n).size())
        throw InvariantViolation("generator catalog: wrong matrix shape in degree " + std::to_string(n));
    if (d.matrix.rank() != d.monomials.size())
        throw InvariantViolation("generator catalog: SW matrix in degree " + std::to_string(n) +
                                 " is singular, generator monomials are dependent");
}

const GeneratorCatalog::Degree& GeneratorCatalog::at(int n) const
{
    auto it = degrees_.find(n);
    if (it == degrees_.end())
        throw UnsupportedDimension("dimension " + std::to_string(n) + " is above the classification ceiling " +
                                   std::to_string(max_dimension_));
    return it->second;
}

const std::vector<Partition>& GeneratorCatalog::monomials(int n) const
{
    return at(n).monomials;
}

const F2Matrix& GeneratorCatalog::matrix(int n) const
{
    return at(n).matrix;
}

F2Matrix GeneratorCatalog::square_matrix(int n) const
{
    const Degree& d = at(n);
    const std::vector<std::size_t> columns = d.matrix.pivot_columns();
    F2Matrix out(d.monomials.size(), columns.size());
    for (std::size_t r = 0; r < d.monomials.size(); ++r)
        for (std::size_t c = 0; c < columns.size(); ++c)
            out.set(r, c, d.matrix.get(r, columns[c]));
    return out;
}

std::vector<Partition> GeneratorCatalog::square_columns(int n) const
{
    const auto parts = partitions(n);
    std::vector<Partition> out;
    for (std::size_t c : at(n).matrix.pivot_columns())
        out.push_back(parts[c]);
    return out;
}

ClassExpression GeneratorCatalog::classify(const ManifoldModel& m) const
{
    const int n = m.dimension();
    const Degree& d = at(n);
    const SWVector v = all_sw_numbers(m);
    std::vector<bool> rhs;
    for (const auto& e : v.entries())
        rhs.push_back(e.second);
    const auto sol = d.matrix.transposed().solve(rhs);
    if (!sol)
        throw InvariantViolation("classify: SW vector of '" + m.label() +
                                 "' is not a combination of generator monomials");
    ClassExpression out(n);
    for (std::size_t r = 0; r < d.monomials.size(); ++r)
        if ((*sol)[r])
            out.toggle(d.monomials[r]);
    return out;
}

GeneratorCatalog GeneratorCatalog::with_cache(int max_dimension, const std::string& dir)
{
    namespace fs = std::filesystem;
    using nlohmann::json;
    if (max_dimension < 0)
        throw InvalidArgument("catalog ceiling must be nonnegative");
    const fs::path file = fs::path(dir) / (std::string("generator-catalog-v") + kEngineVersion + ".json");
    json doc = json::object();
    if (fs::exists(file)) {
        std::ifstream in(file);
        try {
            doc = json::parse(in);
        }
        catch (const json::exception& e) {
            throw InvariantViolation("generator catalog cache " + file.string() + " is unreadable: " + e.what());
        }
    }
    if (!doc.is_object())
        throw InvariantViolation("generator catalog cache " + file.string() + " is not a JSON object");
    if (doc.contains("engine_version") && doc["engine_version"] != kEngineVersion)
        doc = json::object();
    doc["engine_version"] = kEngineVersion;
    json& dims = doc["degrees"];
    if (dims.is_null())
        dims = json::object();

    std::map<int, Degree> degrees;
    bool dirty = false;
    for (int n = 0; n <= max_dimension; ++n) {
        const std::string key = std::to_string(n);
        Degree d;
        if (dims.contains(key)) {
            try {
                const json& entry = dims[key];
                for (const auto& mono : entry.at("monomials"))
                    d.monomials.push_back(Partition{mono.get<std::vector<int>>()});
                const auto& rows = entry.at("rows");
                const std::size_t cols = partitions(n).size();
                d.matrix = F2Matrix(rows.size(), cols);
                for (std::size_t r = 0; r < rows.size(); ++r) {
                    const auto bits = rows[r].get<std::vector<int>>();
                    if (bits.size() != cols)
                        throw InvariantViolation("generator catalog cache: row of wrong length in degree " + key);
                    for (std::size_t c = 0; c < cols; ++c)
                        d.matrix.set(r, c, bits[c] != 0);
                }
            }
            catch (const json::exception& e) {
                throw InvariantViolation("generator catalog cache: malformed entry for degree " + key + ": " +
                                         e.what());
            }
        }
        else {
            d = build_degree(n);
            json entry;
            entry["monomials"] = json::array();
            for (const auto& mono : d.monomials)
                entry["monomials"].push_back(mono.parts);
            entry["rows"] = json::array();
            for (std::size_t r = 0; r < d.matrix.rows(); ++r) {
                std::vector<int> bits;
                for (std::size_t c = 0; c < d.matrix.cols(); ++c)
                    bits.push_back(d.matrix.get(r, c) ? 1 : 0);
                entry["rows"].push_back(bits);
            }
            dims[key] = std::move(entry);
            dirty = true;
        }
        validate(n, d);
        degrees.emplace(n, std::move(d));
    }
    if (dirty) {
        fs::create_directories(dir);
        std::ofstream out(file);
        out << doc.dump(2) << '\n';
    }
    return GeneratorCatalog(max_dimension, std::move(degrees));
}

ClassExpression classify(const ManifoldModel& m)
{
    static const GeneratorCatalog catalog(kDefaultClassifyCeiling);
    return catalog.classify(m);
}

long long bordism_of_space_dim(std::span<const long long> betti, int degree)
{
    long long total = 0;
    for (std::size_t r = 0; r < betti.size() && static_cast<int>(r) <= degree; ++r) {
        if (betti[r] < 0)
            throw InvalidArgument("Betti numbers must be nonnegative");
        total += betti[r] * omega_dim(degree - static_cast<int>(r));
    }
    return total;
}

long long weak_integral_bordism_dim(std::span<const long long> betti, int degree)
{
    return bordism_of_space_dim(betti, degree);
}

}  // namespace steencob
