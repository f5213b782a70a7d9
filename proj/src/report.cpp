#include "polyerg/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace polyerg {

std::string RunConfig::canonical() const {
    std::ostringstream os;
    for (const auto& [k, v] : kv) os << k << "=" << v << "\n";
    return os.str();
}

std::uint64_t RunConfig::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

nlohmann::json RunConfig::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [k, v] : kv) j[k] = v;
    return j;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["subcommand"] = subcommand;
    j["config"] = config.to_json();
    j["result"] = result;
    char hex[32];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(config.hash()));
    j["provenance"] = {{"config_hash", hex}, {"tool_version", kToolVersion}, {"wall_ms", wall_ms}};
    j["schema_version"] = 1;
    return j;
}

nlohmann::json prov_value(double v, const std::string& provenance) {
    return {{"value", v}, {"provenance", provenance}};
}

nlohmann::json prov_exact(const Rat& v) {
    return {{"value", v.get_d()}, {"rational", v.get_str()}, {"provenance", "exact"}};
}

std::string empirical_tag(long N, unsigned long seed) {
    return "empirical(N=" + std::to_string(N) + ", seed=" + std::to_string(seed) + ")";
}

std::string format_sig12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

unsigned long resolve_seed(const std::string& flag_value) {
    if (!flag_value.empty()) return std::stoul(flag_value, nullptr, 0);
    if (const char* env = std::getenv("POLYERG_SEED")) return std::stoul(env, nullptr, 0);
    return kDefaultSeed;
}

namespace {

Rat parse_rat(const std::string& tok) {
    Rat r(tok);
    r.canonicalize();
    return r;
}

bool is_rational_token(const std::string& tok) {
    for (char c : tok)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-')) return false;
    return !tok.empty();
}

}  // namespace

SymbolicReal parse_symbolic(const std::string& text) {
    const IrrationalBasis& basis = IrrationalBasis::standard();
    SymbolicReal acc;
    std::istringstream is(text);
    std::string tok;
    int sign_next = 1;
    bool any = false;
    while (is >> tok) {
        if (tok == "+") continue;
        if (tok == "-") {
            sign_next = -sign_next;
            continue;
        }
        int sg = sign_next;
        sign_next = 1;
        if (tok[0] == '-' && tok.size() > 1 && !is_rational_token(tok)) {
            sg = -sg;
            tok = tok.substr(1);
        }
        auto star = tok.find('*');
        if (star != std::string::npos) {
            Rat c = parse_rat(tok.substr(0, star));
            int idx = basis.index_of(tok.substr(star + 1));
            if (idx < 0) throw ArgumentError("unknown irrational: " + tok.substr(star + 1));
            acc += SymbolicReal::basis_element(static_cast<std::size_t>(idx), c * sg);
        } else if (is_rational_token(tok)) {
            acc += SymbolicReal(parse_rat(tok) * sg);
        } else {
            int idx = basis.index_of(tok);
            if (idx < 0) throw ArgumentError("unknown irrational: " + tok);
            acc += SymbolicReal::basis_element(static_cast<std::size_t>(idx), Rat(sg));
        }
        any = true;
    }
    if (!any) throw ArgumentError("empty symbolic value");
    return acc;
}

UnipotentAffineMap parse_map_config(const std::string& text) {
    std::istringstream is(text);
    std::string line, section;
    std::map<std::string, std::string> kv;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::string trimmed;
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        trimmed = line.substr(a, b - a + 1);
        if (trimmed.empty()) continue;
        if (trimmed.front() == '[' && trimmed.back() == ']') {
            section = trimmed.substr(1, trimmed.size() - 2);
            continue;
        }
        auto eq = trimmed.find('=');
        if (eq == std::string::npos) throw ArgumentError("config: expected key = value, got: " + trimmed);
        std::string key = trimmed.substr(0, eq);
        std::string val = trimmed.substr(eq + 1);
        auto strip = [](std::string s) {
            std::size_t x = s.find_first_not_of(" \t");
            std::size_t y = s.find_last_not_of(" \t");
            return x == std::string::npos ? std::string() : s.substr(x, y - x + 1);
        };
        kv[(section.empty() ? "" : section + ".") + strip(key)] = strip(val);
    }

    auto it = kv.find("map.dim");
    if (it == kv.end()) throw ArgumentError("config: missing map.dim");
    std::size_t dim = std::stoul(it->second);

    UnipotentAffineMap T;
    T.dim = dim;
    T.N.assign(dim, std::vector<Int>(dim, Int(0)));
    T.b.assign(dim, SymbolicReal());
    for (std::size_t i = 0; i < dim; ++i) {
        auto row = kv.find("map.N." + std::to_string(i));
        if (row != kv.end()) {
            std::istringstream rs(row->second);
            std::string tok;
            std::size_t j = 0;
            while (rs >> tok) {
                if (j >= i) throw ArgumentError("config: row N." + std::to_string(i) + " has too many entries");
                T.N[i][j++] = Int(tok);
            }
        }
        auto bent = kv.find("map.b." + std::to_string(i));
        if (bent == kv.end()) throw ArgumentError("config: missing map.b." + std::to_string(i));
        T.b[i] = parse_symbolic(bent->second);
    }
    T.validate();
    return T;
}

UnipotentAffineMap map_from_preset(const std::string& preset) {
    auto colon = preset.find(':');
    std::string kind = colon == std::string::npos ? preset : preset.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : preset.substr(colon + 1);
    if (kind == "rotation") {
        if (arg.empty()) throw ArgumentError("preset rotation needs coordinates, e.g. rotation:sqrt2");
        std::vector<SymbolicReal> shift;
        std::istringstream is(arg);
        std::string tok;
        while (std::getline(is, tok, ',')) shift.push_back(parse_symbolic(tok));
        return UnipotentAffineMap::rotation(std::move(shift));
    }
    if (kind == "skew2") {
        SymbolicReal alpha = arg.empty() ? SymbolicReal::sqrt2() : parse_symbolic(arg);
        return UnipotentAffineMap::skew2(alpha, Int(2), alpha);
    }
    throw ArgumentError("unknown map preset: " + preset);
}

}  // namespace polyerg
