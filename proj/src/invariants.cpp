#include "vtx/invariants.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "vtx/useries.hpp"
#include "vtx/version.hpp"

namespace vtx {

namespace {

int key_degree(const std::vector<int>& key) {
    return std::accumulate(key.begin(), key.end(), 0);
}

bool all_zero(const std::vector<int>& key) {
    return std::all_of(key.begin(), key.end(), [](int e) { return e == 0; });
}

std::string degree_str(const std::vector<int>& d) {
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(d[i]);
    }
    return out.empty() ? "0" : out;
}

// (x^k - x^{-k})^2 as a Laurent polynomial.
QRat sinh_square(int k) {
    LaurentPoly s = LaurentPoly::monomial(Rational(1), k) -
                    LaurentPoly::monomial(Rational(1), -k);
    return QRat(s * s);
}

}  // namespace

DegreeSeries free_energy(const DegreeSeries& z) { return z.log(); }

InvariantTable extract_gw(const DegreeSeries& f, int g_max, const TableMeta& meta) {
    if (g_max < 0) throw std::invalid_argument("extract_gw: negative genus bound");
    InvariantTable table;
    table.meta = meta;
    int order = 2 * g_max;
    for (const auto& [key, value] : f.terms()) {
        if (all_zero(key)) continue;
        USeries series = expand_q_exp(value, order);
        for (int k = series.lead_exp(); k <= order; ++k) {
            if (k % 2 == 0) continue;
            if (series.coeff(k) != 0)
                throw std::domain_error("extract_gw: odd u-coefficient at degree " +
                                        degree_str(key) + ", convention breach");
        }
        for (int g = 0; g <= g_max; ++g) {
            Rational c = series.coeff(2 * g - 2);
            if (c == 0) continue;
            if (g % 2 == 0) c = -c;  // (-1)^{g-1}
            table.entries[{key, g}] = c;
        }
    }
    return table;
}

GVTable extract_gv(const DegreeSeries& f, int g_max, int d_max, const TableMeta& meta) {
    if (d_max > f.cutoff())
        throw std::invalid_argument("extract_gv: requested degree exceeds series cutoff");
    if (g_max < 0) throw std::invalid_argument("extract_gv: negative genus bound");
    GVTable table;
    table.meta = meta;
    // full internal table (all genera; the peel is finite and exact)
    std::map<std::vector<int>, std::map<int, Rational>> atoms;

    std::vector<std::vector<int>> keys;
    for (const auto& [key, value] : f.terms())
        if (!all_zero(key) && key_degree(key) <= d_max) keys.push_back(key);
    std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
        int da = key_degree(a), db = key_degree(b);
        if (da != db) return da < db;
        return a < b;
    });

    QRat v1 = sinh_square(1);
    for (const std::vector<int>& key : keys) {
        QRat remainder = f.coeff(key);
        // subtract multiple-cover images of lower degrees
        for (int k = 2; k <= key_degree(key); ++k) {
            bool divisible = true;
            std::vector<int> base(key.size());
            for (std::size_t i = 0; i < key.size(); ++i) {
                if (key[i] % k != 0) {
                    divisible = false;
                    break;
                }
                base[i] = key[i] / k;
            }
            if (!divisible) continue;
            auto it = atoms.find(base);
            if (it == atoms.end()) continue;
            QRat vk = sinh_square(k);
            Rational inv_k(1, k);
            inv_k.canonicalize();
            for (const auto& [g, n] : it->second) {
                if (n == 0) continue;
                Rational c = n * inv_k;
                if (g % 2 == 0) c = -c;  // (-1)^{g-1}
                remainder -= QRat(c) * vk.pow(g - 1);
            }
        }
        // remainder must be sum_g (-1)^{g-1} n_g (x-x^{-1})^{2g-2}
        QRat poly = remainder * v1;
        std::map<int, Rational> extracted;
        bool clean = poly.is_polynomial();
        if (clean) {
            LaurentPoly p = poly.num();
            while (!p.is_zero()) {
                int top = p.max_exp();
                if (top < 0 || top % 2 != 0) {
                    clean = false;
                    break;
                }
                int g = top / 2;
                Rational c = p.coeff(top);
                extracted[g] = c;
                QRat piece = QRat(c) * v1.pow(g);
                if (!piece.is_polynomial()) throw std::logic_error("extract_gv: peel broke");
                p -= piece.num();
                if (!p.is_zero() && p.max_exp() >= top) {
                    clean = false;
                    break;
                }
            }
        }
        if (!clean) {
            table.violations.push_back("degree " + degree_str(key) +
                                       ": free energy is not a finite GV sum");
            continue;
        }
        std::map<int, Rational> genus_table;
        for (auto& [g, c] : extracted) {
            Rational n = (g % 2 == 0) ? Rational(-c) : c;  // undo (-1)^{g-1}
            genus_table[g] = n;
            if (n.get_den() != 1)
                table.violations.push_back("degree " + degree_str(key) + " genus " +
                                           std::to_string(g) + ": non-integer value " +
                                           to_string(n));
        }
        atoms[key] = genus_table;
        for (const auto& [g, n] : genus_table)
            if (g <= g_max && n != 0) table.entries[{key, g}] = n;
    }
    return table;
}

DegreeSeries gv_resum(const GVTable& table, const std::vector<std::string>& vars, int cutoff) {
    DegreeSeries f(vars, cutoff);
    for (const auto& [key, n] : table.entries) {
        if (n == 0) continue;
        for (int k = 1; k * key_degree(key.degree) <= cutoff; ++k) {
            std::vector<int> scaled(key.degree.size());
            for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = key.degree[i] * k;
            Rational c = n;
            c /= k;
            if (key.genus % 2 == 0) c = -c;  // (-1)^{g-1}
            f.add_term(scaled, QRat(c) * sinh_square(k).pow(key.genus - 1));
        }
    }
    return f;
}

namespace {

using nlohmann::json;

json meta_json(const TableMeta& meta) {
    json j;
    j["geometry"] = meta.geometry;
    j["graph_hash"] = meta.graph_hash;
    j["cutoff"] = meta.cutoff;
    j["conventions_version"] = conventions_version;
    return j;
}

template <class Table>
std::string emit_json_impl(const Table& table, const char* value_field) {
    json j = meta_json(table.meta);
    j["entries"] = json::array();
    for (const auto& [key, value] : table.entries) {
        json e;
        e["g"] = key.genus;
        e["d"] = key.degree;
        e[value_field] = to_string(value);
        j["entries"].push_back(e);
    }
    if constexpr (requires { table.violations; }) {
        j["violations"] = table.violations;
    }
    return j.dump(2) + "\n";
}

template <class Table>
std::string emit_csv_impl(const Table& table, const char* value_name) {
    std::ostringstream os;
    os << "# geometry=" << table.meta.geometry << " cutoff=" << table.meta.cutoff
       << " conventions_version=" << conventions_version << "\n";
    os << "g,d," << value_name << "\n";
    for (const auto& [key, value] : table.entries)
        os << key.genus << "," << degree_str(key.degree) << "," << to_string(value) << "\n";
    return os.str();
}

template <class Table>
std::string emit_text_impl(const Table& table, const char* value_name) {
    std::ostringstream os;
    os << "geometry: " << table.meta.geometry << "\n";
    os << "cutoff: " << table.meta.cutoff << "\n";
    os << "conventions_version: " << conventions_version << "\n";
    for (const auto& [key, value] : table.entries)
        os << value_name << "[g=" << key.genus << ", d=" << degree_str(key.degree)
           << "] = " << to_string(value) << "\n";
    return os.str();
}

}  // namespace

// Entries are emitted in map order: degree-lex inside InvariantKey ordering.
std::string emit_table(const InvariantTable& table, TableFormat format) {
    switch (format) {
        case TableFormat::json: return emit_json_impl(table, "value");
        case TableFormat::csv: return emit_csv_impl(table, "N");
        case TableFormat::text: return emit_text_impl(table, "N");
    }
    throw std::invalid_argument("emit_table: unknown format");
}

std::string emit_table(const GVTable& table, TableFormat format) {
    switch (format) {
        case TableFormat::json: return emit_json_impl(table, "value");
        case TableFormat::csv: return emit_csv_impl(table, "n");
        case TableFormat::text: return emit_text_impl(table, "n");
    }
    throw std::invalid_argument("emit_table: unknown format");
}

}  // namespace vtx
