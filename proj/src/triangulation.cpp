#include "flagsolve/triangulation.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace flagsolve {

namespace {

using nlohmann::json;

[[noreturn]] void fail(int line, const std::string& what) {
    std::ostringstream os;
    os << "triangulation parse error at line " << line << ": " << what;
    throw std::runtime_error(os.str());
}

std::array<int, 3> sorted_face(const std::array<int, 3>& f) {
    std::array<int, 3> s = f;
    std::sort(s.begin(), s.end());
    return s;
}

bool distinct_labels(const std::array<int, 3>& f) {
    for (int v : f)
        if (v < 1 || v > 4) return false;
    return f[0] != f[1] && f[0] != f[2] && f[1] != f[2];
}

// Parity of the permutation of (1,2,3,4) given by the ordered images.
int permutation_sign(const std::array<int, 4>& image) {
    int sign = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (image[i] > image[j]) sign = -sign;
    return sign;
}

// Full vertex map of a pairing in the stated direction: map[v] for v in 1..4.
std::array<int, 5> vertex_map(const FacePairing& p) {
    std::array<int, 5> m = {0, 0, 0, 0, 0};
    for (int k = 0; k < 3; ++k) m[p.face_a[k]] = p.face_b[k];
    int ma = 10, mb = 10;
    for (int v = 1; v <= 4; ++v) {
        bool ina = false, inb = false;
        for (int k = 0; k < 3; ++k) {
            if (p.face_a[k] == v) ina = true;
            if (p.face_b[k] == v) inb = true;
        }
        if (!ina) ma = v;
        if (!inb) mb = v;
    }
    m[ma] = mb;
    return m;
}

std::array<int, 5> inverse_map(const std::array<int, 5>& m) {
    std::array<int, 5> inv = {0, 0, 0, 0, 0};
    for (int v = 1; v <= 4; ++v) inv[m[v]] = v;
    return inv;
}

PathState parse_state_token(const std::string& tok, int line) {
    // Format: (tet:abc) with single-digit vertex labels.
    if (tok.size() < 6 || tok.front() != '(' || tok.back() != ')') fail(line, "bad state " + tok);
    const std::string body = tok.substr(1, tok.size() - 2);
    const auto colon = body.find(':');
    if (colon == std::string::npos) fail(line, "state missing ':' in " + tok);
    PathState s;
    try {
        s.tet = std::stoi(body.substr(0, colon));
    } catch (const std::exception&) {
        fail(line, "bad tetrahedron index in " + tok);
    }
    const std::string verts = body.substr(colon + 1);
    if (verts.size() != 3) fail(line, "state needs three vertices in " + tok);
    for (int k = 0; k < 3; ++k) {
        if (verts[k] < '1' || verts[k] > '4') fail(line, "vertex out of range in " + tok);
        s.triple[k] = verts[k] - '0';
    }
    return s;
}

std::vector<PathState> parse_state_list(std::istringstream& in, int line) {
    std::vector<PathState> states;
    std::string tok;
    while (in >> tok) states.push_back(parse_state_token(tok, line));
    return states;
}

json state_to_json(const PathState& s) {
    return json{{"tet", s.tet}, {"triple", {s.triple[0], s.triple[1], s.triple[2]}}};
}

PathState state_from_json(const json& j) {
    PathState s;
    s.tet = j.at("tet").get<int>();
    const auto& t = j.at("triple");
    for (int k = 0; k < 3; ++k) s.triple[k] = t.at(k).get<int>();
    return s;
}

json states_to_json(const std::vector<PathState>& v) {
    json arr = json::array();
    for (const auto& s : v) arr.push_back(state_to_json(s));
    return arr;
}

std::vector<PathState> states_from_json(const json& j) {
    std::vector<PathState> v;
    for (const auto& e : j) v.push_back(state_from_json(e));
    return v;
}

bool same_face_set(const std::array<int, 3>& a, const std::array<int, 3>& b) {
    return sorted_face(a) == sorted_face(b);
}

// Is the move s1 -> s2 a legal internal step (same tetrahedron): a reordering
// of the same face, or one vertex swapped for the fourth vertex?
bool legal_internal(const PathState& s1, const PathState& s2) {
    if (s1.tet != s2.tet) return false;
    if (!distinct_labels(s2.triple)) return false;
    if (same_face_set(s1.triple, s2.triple)) return true;
    int differing = 0, pos = -1;
    for (int k = 0; k < 3; ++k)
        if (s1.triple[k] != s2.triple[k]) {
            ++differing;
            pos = k;
        }
    return differing == 1 && s2.triple[pos] == s1.missing_vertex();
}

bool legal_crossing(const Triangulation& t, const PathState& s1, const PathState& s2) {
    auto side = find_pairing(t, s1.tet, s1.triple);
    if (!side) return false;
    return map_across(t, *side, s1) == s2;
}

void check_path(const Triangulation& t, const std::vector<PathState>& path, bool closed,
                const std::string& what) {
    if (path.empty()) throw std::runtime_error(what + ": empty path");
    for (const auto& s : path) {
        if (s.tet < 0 || s.tet >= t.num_tets)
            throw std::runtime_error(what + ": tetrahedron index out of range in " + s.str());
        if (!distinct_labels(s.triple))
            throw std::runtime_error(what + ": bad vertex triple in " + s.str());
    }
    const std::size_t n = path.size();
    const std::size_t last = closed ? n : n - 1;
    for (std::size_t k = 0; k < last; ++k) {
        const PathState& a = path[k];
        const PathState& b = path[(k + 1) % n];
        if (!legal_internal(a, b) && !legal_crossing(t, a, b))
            throw std::runtime_error(what + ": illegal step " + a.str() + " -> " + b.str());
    }
}

}  // namespace

int PathState::missing_vertex() const {
    int sum = 0;
    for (int v : triple) sum += v;
    return 10 - sum;
}

std::string PathState::str() const {
    std::ostringstream os;
    os << '(' << tet << ':' << triple[0] << triple[1] << triple[2] << ')';
    return os.str();
}

Triangulation parse_triangulation(const std::string& text) {
    Triangulation t;
    std::istringstream stream(text);
    std::string raw;
    int lineno = 0;
    int current_cusp = -1;
    while (std::getline(stream, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream in(raw);
        std::string key;
        if (!(in >> key)) continue;
        if (key == "name") {
            if (!(in >> t.name)) fail(lineno, "name needs a value");
        } else if (key == "tet") {
            if (!(in >> t.num_tets) || t.num_tets <= 0) fail(lineno, "bad tetrahedron count");
        } else if (key == "pair") {
            // pair (t a b c) (t' a' b' c')
            std::string rest;
            std::getline(in, rest);
            std::array<int, 8> vals;
            std::size_t nv = 0;
            std::string cleaned;
            for (char c : rest) cleaned += (c == '(' || c == ')') ? ' ' : c;
            std::istringstream vin(cleaned);
            int x;
            while (vin >> x) {
                if (nv >= 8) fail(lineno, "too many numbers in pair");
                vals[nv++] = x;
            }
            if (nv != 8) fail(lineno, "pair needs two (tet a b c) groups");
            FacePairing p;
            p.tet_a = vals[0];
            p.face_a = {vals[1], vals[2], vals[3]};
            p.tet_b = vals[4];
            p.face_b = {vals[5], vals[6], vals[7]};
            t.pairings.push_back(p);
        } else if (key == "cusp") {
            int idx;
            if (!(in >> idx) || idx < 0) fail(lineno, "bad cusp index");
            if (idx != static_cast<int>(t.cusps.size()))
                fail(lineno, "cusps must be numbered consecutively from 0");
            t.cusps.emplace_back();
            current_cusp = idx;
        } else if (key == "meridian" || key == "longitude") {
            if (current_cusp < 0) fail(lineno, key + " outside a cusp section");
            auto states = parse_state_list(in, lineno);
            if (states.empty()) fail(lineno, key + " needs at least one state");
            if (key == "meridian")
                t.cusps[current_cusp].meridian = std::move(states);
            else
                t.cusps[current_cusp].longitude = std::move(states);
        } else if (key == "basepoint") {
            std::string tok;
            if (!(in >> tok)) fail(lineno, "basepoint needs a state");
            t.base_face = parse_state_token(tok, lineno);
        } else if (key == "generator") {
            GeneratorPath g;
            g.path = parse_state_list(in, lineno);
            if (g.path.empty()) fail(lineno, "generator needs at least one state");
            t.generators.push_back(std::move(g));
        } else if (key == "conjugator") {
            if (t.generators.empty()) fail(lineno, "conjugator before any generator");
            if (!t.generators.back().conjugator.empty())
                fail(lineno, "generator already has a conjugator");
            t.generators.back().conjugator = parse_state_list(in, lineno);
        } else {
            fail(lineno, "unknown keyword '" + key + "'");
        }
    }
    return t;
}

Triangulation load_triangulation(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open triangulation file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return triangulation_from_json(buf.str());
    return parse_triangulation(buf.str());
}

std::string triangulation_to_json(const Triangulation& t) {
    json j;
    j["name"] = t.name;
    j["tetrahedra"] = t.num_tets;
    j["pairings"] = json::array();
    for (const auto& p : t.pairings) {
        j["pairings"].push_back(
            {{"tet_a", p.tet_a},
             {"face_a", {p.face_a[0], p.face_a[1], p.face_a[2]}},
             {"tet_b", p.tet_b},
             {"face_b", {p.face_b[0], p.face_b[1], p.face_b[2]}}});
    }
    j["cusps"] = json::array();
    for (const auto& c : t.cusps) {
        j["cusps"].push_back({{"meridian", states_to_json(c.meridian)},
                              {"longitude", states_to_json(c.longitude)}});
    }
    if (t.base_face) j["basepoint"] = state_to_json(*t.base_face);
    j["generators"] = json::array();
    for (const auto& g : t.generators) {
        j["generators"].push_back({{"path", states_to_json(g.path)},
                                   {"conjugator", states_to_json(g.conjugator)}});
    }
    return j.dump(2) + "\n";
}

Triangulation triangulation_from_json(const std::string& json_text) {
    const json j = json::parse(json_text);
    Triangulation t;
    t.name = j.value("name", std::string());
    t.num_tets = j.at("tetrahedra").get<int>();
    for (const auto& jp : j.at("pairings")) {
        FacePairing p;
        p.tet_a = jp.at("tet_a").get<int>();
        p.tet_b = jp.at("tet_b").get<int>();
        for (int k = 0; k < 3; ++k) {
            p.face_a[k] = jp.at("face_a").at(k).get<int>();
            p.face_b[k] = jp.at("face_b").at(k).get<int>();
        }
        t.pairings.push_back(p);
    }
    if (j.contains("cusps"))
        for (const auto& jc : j.at("cusps")) {
            Cusp c;
            c.meridian = states_from_json(jc.at("meridian"));
            c.longitude = states_from_json(jc.at("longitude"));
            t.cusps.push_back(std::move(c));
        }
    if (j.contains("basepoint")) t.base_face = state_from_json(j.at("basepoint"));
    if (j.contains("generators"))
        for (const auto& jg : j.at("generators")) {
            GeneratorPath g;
            g.path = states_from_json(jg.at("path"));
            g.conjugator = states_from_json(jg.at("conjugator"));
            t.generators.push_back(std::move(g));
        }
    return t;
}

std::optional<PairingSide> find_pairing(const Triangulation& t, int tet,
                                        const std::array<int, 3>& face) {
    const std::array<int, 3> want = sorted_face(face);
    for (std::size_t i = 0; i < t.pairings.size(); ++i) {
        const FacePairing& p = t.pairings[i];
        if (p.tet_a == tet && sorted_face(p.face_a) == want) return PairingSide{i, false};
        if (p.tet_b == tet && sorted_face(p.face_b) == want) return PairingSide{i, true};
    }
    return std::nullopt;
}

PathState map_across(const Triangulation& t, const PairingSide& side, const PathState& state) {
    const FacePairing& p = t.pairings[side.index];
    std::array<int, 5> m = vertex_map(p);
    int target = p.tet_b;
    if (side.reversed) {
        m = inverse_map(m);
        target = p.tet_a;
    }
    PathState out;
    out.tet = target;
    for (int k = 0; k < 3; ++k) out.triple[k] = m[state.triple[k]];
    return out;
}

void validate_triangulation(const Triangulation& t) {
    if (t.num_tets <= 0) throw std::runtime_error("triangulation has no tetrahedra");
    if (t.pairings.size() != static_cast<std::size_t>(2 * t.num_tets))
        throw std::runtime_error("face pairing count must be twice the tetrahedron count");

    std::set<std::pair<int, std::array<int, 3>>> seen;
    for (const auto& p : t.pairings) {
        if (p.tet_a < 0 || p.tet_a >= t.num_tets || p.tet_b < 0 || p.tet_b >= t.num_tets)
            throw std::runtime_error("pairing references a tetrahedron out of range");
        if (!distinct_labels(p.face_a) || !distinct_labels(p.face_b))
            throw std::runtime_error("pairing face labels must be three distinct labels 1..4");
        if (p.tet_a == p.tet_b && sorted_face(p.face_a) == sorted_face(p.face_b))
            throw std::runtime_error("a face cannot be glued to itself");
        for (const auto& [tet, face] :
             {std::pair{p.tet_a, sorted_face(p.face_a)}, std::pair{p.tet_b, sorted_face(p.face_b)}}) {
            if (!seen.insert({tet, face}).second)
                throw std::runtime_error("face glued more than once");
        }
        // Orientation compatibility: the vertex correspondence must be an odd
        // permutation of the labels.
        const std::array<int, 5> m = vertex_map(p);
        if (permutation_sign({m[1], m[2], m[3], m[4]}) != -1)
            throw std::runtime_error("pairing is not orientation-compatible");
    }
    if (seen.size() != static_cast<std::size_t>(4 * t.num_tets))
        throw std::runtime_error("not every face is glued");

    for (std::size_t c = 0; c < t.cusps.size(); ++c) {
        check_path(t, t.cusps[c].meridian, true, "cusp " + std::to_string(c) + " meridian");
        check_path(t, t.cusps[c].longitude, true, "cusp " + std::to_string(c) + " longitude");
    }
    if (t.base_face) {
        if (t.base_face->tet < 0 || t.base_face->tet >= t.num_tets ||
            !distinct_labels(t.base_face->triple))
            throw std::runtime_error("bad base face");
    }
    for (std::size_t g = 0; g < t.generators.size(); ++g) {
        check_path(t, t.generators[g].path, false, "generator " + std::to_string(g));
        if (!t.generators[g].conjugator.empty())
            check_path(t, t.generators[g].conjugator, false,
                       "conjugator " + std::to_string(g));
    }

    edge_classes(t);  // throws if the edge orbits fail to close
}

std::vector<EdgeClass> edge_classes(const Triangulation& t) {
    // Walk state: an oriented edge plus the vertex spanning the exit face.
    // A tetrahedron may meet the same geometric edge more than once, so one
    // cycle can repeat an oriented edge (with the other exit face); closure
    // is detected on the full state.  The direction-reversed walk visits the
    // same oriented edges, so marking edges as consumed also keeps each cycle
    // from appearing twice.
    struct WalkState {
        TetEdge edge;
        int keep;
        bool operator==(const WalkState& o) const { return edge == o.edge && keep == o.keep; }
    };
    auto initial_keep = [](const TetEdge& e) {
        int best = 0;
        for (int v = 1; v <= 4; ++v)
            if (v != e.from && v != e.to && v > best) best = v;
        return best;
    };
    auto step = [&t](const WalkState& s) {
        const std::array<int, 3> exit_face = {s.edge.from, s.edge.to, s.keep};
        auto side = find_pairing(t, s.edge.tet, exit_face);
        if (!side) throw std::logic_error("edge walk hit an unglued face");
        const PathState image =
            map_across(t, *side, PathState{s.edge.tet, exit_face});
        WalkState next;
        next.edge = {image.tet, image.triple[0], image.triple[1]};
        const int entry_extra = image.triple[2];
        next.keep = 0;
        for (int v = 1; v <= 4; ++v)
            if (v != next.edge.from && v != next.edge.to && v != entry_extra) next.keep = v;
        return next;
    };

    std::set<std::tuple<int, int, int>> consumed;
    std::vector<EdgeClass> classes;
    for (int tet = 0; tet < t.num_tets; ++tet) {
        for (int from = 1; from <= 4; ++from) {
            for (int to = 1; to <= 4; ++to) {
                if (from == to) continue;
                if (consumed.count({tet, from, to})) continue;
                const WalkState start{{tet, from, to}, initial_keep({tet, from, to})};
                EdgeClass ec;
                WalkState cur = start;
                long guard = 0;
                while (true) {
                    ec.cycle.push_back(cur.edge);
                    const WalkState next = step(cur);
                    if (next == start) break;
                    cur = next;
                    if (++guard > 1000000)
                        throw std::logic_error("edge walk failed to close");
                }
                for (const TetEdge& e : ec.cycle) consumed.insert({e.tet, e.from, e.to});
                classes.push_back(std::move(ec));
            }
        }
    }
    // Sanity: together the cycles must cover every oriented edge.
    if (consumed.size() != static_cast<std::size_t>(12 * t.num_tets))
        throw std::logic_error("edge cycles failed to cover all oriented edges");
    return classes;
}

}  // namespace flagsolve
