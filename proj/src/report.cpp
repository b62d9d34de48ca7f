#include "flagsolve/report.hpp"

#include <json.hpp>

#include <cstdint>
#include <sstream>

namespace flagsolve {

namespace {

using Json = nlohmann::ordered_json;

std::string rat_str(const Rat& q) {
    return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

Json poly_json(const UniPoly& p) {
    Json a = Json::array();
    for (const Rat& c : p.coeffs()) a.push_back(rat_str(c));
    return a;
}

Json interval_json(const RatInterval& iv) {
    return Json{{"lo", rat_str(iv.lo())}, {"hi", rat_str(iv.hi())}};
}

Json box_json(const ComplexBox& b) {
    return Json{{"re", interval_json(b.re())}, {"im", interval_json(b.im())}};
}

Json matrix_json(const FieldMatrix3& m) {
    Json rows = Json::array();
    for (int i = 0; i < 3; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 3; ++j) row.push_back(poly_json(m.at(i, j).value()));
        rows.push_back(row);
    }
    return rows;
}

Json condition_json(const HolonomyCondition& c) {
    if (c.kind == HolonomyCondition::Kind::Unipotent) return Json{{"kind", "unipotent"}};
    Json cusps = Json::array();
    for (const auto& t : c.targets) {
        Json one;
        if (t.A) one["A"] = poly_json(*t.A);
        if (t.Astar) one["Astar"] = poly_json(*t.Astar);
        if (t.B) one["B"] = poly_json(*t.B);
        if (t.Bstar) one["Bstar"] = poly_json(*t.Bstar);
        cusps.push_back(one);
    }
    return Json{{"kind", "fixed_values"},
                {"constant", c.constant_name},
                {"minpoly", poly_json(c.constant_minpoly)},
                {"cusps", cusps}};
}

/// Fixed-point decimal approximation of the midpoint with a half-width
/// bound, e.g. "2.029883213 (+/- 2^-20)" style output for humans; exact data
/// lives in the JSON rendering.
std::string approx_str(const RatInterval& iv, int digits = 9) {
    Rat mid = (iv.lo() + iv.hi()) * Rat(1, 2);
    bool neg = mid < 0;
    if (neg) mid = -mid;
    Int scale = int_pow(Int(10), static_cast<unsigned long>(digits));
    Int scaled = (mid.get_num() * scale) / mid.get_den();
    Int whole = scaled / scale, frac = scaled % scale;
    std::string f = frac.get_str();
    f.insert(f.begin(), static_cast<std::size_t>(digits) - f.size(), '0');
    std::string s = (neg ? "-" : "") + whole.get_str() + "." + f;
    return s;
}

std::string flags_str(const ClassificationFlags& f) {
    std::string s;
    if (f.is_real) s += "real ";
    if (f.is_hyperbolic) s += "hyperbolic ";
    if (f.is_cr) s += f.is_pu21_verified ? "cr(pu21-verified) " : "cr ";
    if (s.empty()) s = "generic ";
    s.pop_back();
    return s;
}

}  // namespace

std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out = "fnv1a64:";
    for (int i = 60; i >= 0; i -= 4) out += hex[(h >> i) & 0xF];
    return out;
}

std::string report_json(const SolutionReport& r) {
    Json j;
    j["schema_version"] = 1;
    j["input"] = Json{{"name", r.input_name},
                      {"digest", r.input_digest},
                      {"tetrahedra", r.num_tets},
                      {"cusps", r.num_cusps}};
    j["holonomy"] = condition_json(r.condition);
    Json sys;
    sys["variables"] = r.variables;
    sys["kept"] = r.kept;
    sys["equations"] = r.equation_count;
    sys["empty"] = r.empty_system;
    if (r.empty_system) sys["contradiction"] = r.contradiction;
    if (!r.dumped_equations.empty()) sys["reduced_equations"] = r.dumped_equations;
    j["system"] = sys;
    j["ideal"] = Json{{"dimension", r.dimension}, {"degree", r.degree}};
    j["decomposed"] = r.decomposed;
    Json comps = Json::array();
    for (const ComponentRecord& c : r.components) {
        Json jc;
        jc["eliminant"] = poly_json(c.eliminant);
        jc["degree"] = c.eliminant.degree();
        jc["multiplicity"] = c.multiplicity;
        Json values;
        for (std::size_t i = 0; i < c.values.size(); ++i)
            values[r.variables[i]] = poly_json(c.values[i].value());
        jc["values"] = values;
        Json roots = Json::array();
        for (std::size_t i = 0; i < c.roots.size(); ++i) {
            Json jr;
            jr["box"] = box_json(c.roots[i].box());
            jr["flags"] = Json{{"real", c.flags[i].is_real},
                               {"hyperbolic", c.flags[i].is_hyperbolic},
                               {"cr", c.flags[i].is_cr},
                               {"pu21_verified", c.flags[i].is_pu21_verified}};
            jr["volume"] = interval_json(c.volumes[i]);
            roots.push_back(jr);
        }
        jc["roots"] = roots;
        Json cusps = Json::array();
        for (const CuspRankRecord& cr : c.cusp_ranks) {
            Json one;
            one["resolved"] = cr.resolved;
            if (cr.resolved) {
                one["rank"] = cr.rank.rank;
                one["has_witness"] = cr.rank.has_witness;
                if (cr.rank.has_witness) {
                    one["meridian_power"] = cr.rank.meridian_power;
                    one["longitude_power"] = cr.rank.longitude_power;
                }
            }
            cusps.push_back(one);
        }
        jc["cusps"] = cusps;
        Json gens = Json::array();
        for (const FieldMatrix3& g : c.generators) gens.push_back(matrix_json(g));
        jc["generators"] = gens;
        comps.push_back(jc);
    }
    j["components"] = comps;
    j["status"] = r.status;
    return j.dump(2) + "\n";
}

std::string report_text(const SolutionReport& r) {
    std::ostringstream out;
    out << "census report for " << r.input_name << " (" << r.input_digest << ")\n";
    if (r.condition.kind == HolonomyCondition::Kind::Unipotent) {
        out << "holonomy condition: unipotent boundary\n";
    } else {
        out << "holonomy condition: fixed boundary eigenvalues, constant "
            << r.condition.constant_name << " with minimal polynomial "
            << r.condition.constant_minpoly.str(r.condition.constant_name) << "\n";
    }
    out << "system: " << r.variables.size() << " variables, " << r.equation_count
        << " equations after reduction; kept {";
    for (std::size_t i = 0; i < r.kept.size(); ++i) out << (i ? ", " : "") << r.kept[i];
    out << "}\n";
    if (r.empty_system) {
        out << "the system is contradictory: " << r.contradiction << "\n";
        out << "status: " << r.status << "\n";
        return out.str();
    }
    out << "saturated ideal: dimension " << r.dimension << ", degree " << r.degree << "\n";
    if (!r.decomposed) {
        if (r.dimension > 0)
            out << "positive-dimensional ideal: not decomposed\n";
        else if (r.dimension < 0)
            out << "no solutions outside the degenerate locus\n";
    }
    for (std::size_t ci = 0; ci < r.components.size(); ++ci) {
        const ComponentRecord& c = r.components[ci];
        out << "component " << (ci + 1) << ": eliminant " << c.eliminant.str("Y") << " (degree "
            << c.eliminant.degree() << ", multiplicity " << c.multiplicity << ")\n";
        for (std::size_t i = 0; i < c.roots.size(); ++i) {
            out << "  root " << (i + 1) << ": " << flags_str(c.flags[i]) << "; volume ~ "
                << approx_str(c.volumes[i]) << " (certified in ["
                << approx_str(RatInterval::point(c.volumes[i].lo()), 9) << ", "
                << approx_str(RatInterval::point(c.volumes[i].hi()), 9) << "])\n";
        }
        for (std::size_t k = 0; k < c.cusp_ranks.size(); ++k) {
            const CuspRankRecord& cr = c.cusp_ranks[k];
            out << "  cusp " << (k + 1) << ": ";
            if (!cr.resolved) {
                out << "peripheral rank not resolved\n";
            } else {
                out << "peripheral rank " << cr.rank.rank;
                if (cr.rank.has_witness)
                    out << ", witness gM^" << cr.rank.meridian_power << " = gL^"
                        << cr.rank.longitude_power;
                out << "\n";
            }
        }
    }
    out << "status: " << r.status << "\n";
    return out.str();
}

}  // namespace flagsolve
