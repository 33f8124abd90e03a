#include "makekex/serialize.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace makekex {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

const json& require(const json& j, const char* key, const std::string& where) {
    const auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

std::uint64_t parse_u64(const json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a decimal string");
    const std::string& s = j.get_ref<const std::string&>();
    const bool canonical =
        !s.empty() && (s.size() == 1 || s[0] != '0') &&
        s.find_first_not_of("0123456789") == std::string::npos;
    if (!canonical) fail(where, "not a canonical decimal integer: '" + s + "'");
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        fail(where, "integer out of 64-bit range: '" + s + "'");
    }
    return v;
}

std::uint64_t parse_residue(const json& j, const PrimeModulus& mod, const std::string& where) {
    const std::uint64_t v = parse_u64(j, where);
    if (v >= mod.value()) fail(where, "value " + std::to_string(v) + " is not reduced");
    return v;
}

std::size_t parse_count(const json& j, const std::string& where) {
    if (!j.is_number_unsigned()) fail(where, "expected a non-negative integer");
    return j.get<std::size_t>();
}

std::string dec(std::uint64_t v) { return std::to_string(v); }

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open file for writing: " + path.string());
    out << bytes;
    if (!out) throw ParseError("write failed: " + path.string());
}

json parse_json(const std::string& bytes, const std::string& where) {
    json j = json::parse(bytes, nullptr, false);
    if (j.is_discarded()) {
        // Reparse with exceptions to recover the byte offset of the error.
        try {
            j = json::parse(bytes);
        } catch (const json::parse_error& e) {
            fail(where, e.what());
        }
        fail(where, "malformed JSON");
    }
    return j;
}

void check_header(const json& j, const char* kind, const std::string& where) {
    if (!j.is_object()) fail(where, "expected a JSON object");
    if (parse_count(require(j, "schema_version", where), where + ".schema_version") != 1) {
        fail(where, "unsupported schema_version");
    }
    const json& k = require(j, "kind", where);
    if (!k.is_string() || k.get_ref<const std::string&>() != kind) {
        fail(where, std::string("expected kind '") + kind + "'");
    }
}

json permutation_to_json(const Permutation& p) {
    json a = json::array();
    for (std::uint32_t v : p) a.push_back(v);
    return a;
}

Permutation permutation_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected a permutation array");
    Permutation p;
    p.reserve(j.size());
    for (const json& v : j) {
        if (!v.is_number_unsigned()) fail(where, "permutation image must be a non-negative integer");
        p.push_back(v.get<std::uint32_t>());
    }
    return p;
}

json group_to_json(const GroupSpec& spec, const FiniteGroupTable& g) {
    json out;
    if (spec.is_builtin()) {
        out["name"] = spec.name;
    } else {
        json gens = json::array();
        for (const auto& p : spec.generators) gens.push_back(permutation_to_json(p));
        out["generators"] = gens;
    }
    out["degree"] = g.degree();
    out["order"] = g.order();
    json elems = json::array();
    for (std::size_t i = 0; i < g.order(); ++i) {
        elems.push_back(permutation_to_json(g.element(i)));
    }
    out["elements"] = elems;
    out["table_hash"] = to_hex64(g.table_hash());
    return out;
}

std::pair<GroupSpec, GroupPtr> group_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) fail(where, "expected a group object");
    GroupSpec spec;
    if (j.contains("name")) {
        const json& name = j.at("name");
        if (!name.is_string()) fail(where + ".name", "expected a string");
        spec.name = name.get<std::string>();
    } else {
        spec.degree = parse_count(require(j, "degree", where), where + ".degree");
        const json& gens = require(j, "generators", where);
        if (!gens.is_array()) fail(where + ".generators", "expected an array");
        for (const json& g : gens) {
            spec.generators.push_back(permutation_from_json(g, where + ".generators"));
        }
    }
    GroupPtr group;
    try {
        group = resolve_group(spec);
    } catch (const Error& e) {
        fail(where, e.what());
    }
    // The recorded enumeration and hash must match the reconstruction; a
    // reader that trusted the file's element order would go wrong otherwise.
    if (parse_count(require(j, "order", where), where + ".order") != group->order()) {
        fail(where + ".order", "does not match the reconstructed group");
    }
    const json& hash = require(j, "table_hash", where);
    if (!hash.is_string() || hash.get_ref<const std::string&>() != to_hex64(group->table_hash())) {
        fail(where + ".table_hash", "does not match the reconstructed group");
    }
    const json& elems = require(j, "elements", where);
    if (!elems.is_array() || elems.size() != group->order()) {
        fail(where + ".elements", "wrong element count");
    }
    for (std::size_t i = 0; i < group->order(); ++i) {
        if (permutation_from_json(elems[i], where + ".elements") != group->element(i)) {
            fail(where + ".elements", "enumeration does not match the reconstructed group");
        }
    }
    return {std::move(spec), std::move(group)};
}

json element_to_json(const GroupRingElement& e, bool commutative) {
    if (commutative) return dec(e.at(0));
    json a = json::array();
    for (std::size_t i = 0; i < e.size(); ++i) a.push_back(dec(e.at(i)));
    return a;
}

GroupRingElement element_from_json(const json& j, const GroupPtr& group,
                                   const PrimeModulus& mod, bool commutative,
                                   const std::string& where) {
    GroupRingElement e(group, mod);
    if (commutative) {
        e.set(0, parse_residue(j, mod, where));
        return e;
    }
    if (!j.is_array() || j.size() != group->order()) {
        fail(where, "expected a coefficient array of the group order");
    }
    for (std::size_t i = 0; i < group->order(); ++i) {
        e.set(i, parse_residue(j[i], mod, where + "[" + std::to_string(i) + "]"));
    }
    return e;
}

json matrix_to_json(const GroupRingMatrix& a, bool commutative) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.dim(); ++j) {
            row.push_back(element_to_json(a.at(i, j), commutative));
        }
        rows.push_back(row);
    }
    return rows;
}

GroupRingMatrix matrix_from_json(const json& j, const GroupPtr& group,
                                 const PrimeModulus& mod, std::size_t n,
                                 bool commutative, const std::string& where) {
    if (!j.is_array() || j.size() != n) fail(where, "expected " + std::to_string(n) + " rows");
    GroupRingMatrix a(group, mod, n);
    for (std::size_t i = 0; i < n; ++i) {
        const json& row = j[i];
        if (!row.is_array() || row.size() != n) {
            fail(where, "row " + std::to_string(i) + " has the wrong length");
        }
        for (std::size_t c = 0; c < n; ++c) {
            const std::string cell =
                where + "[" + std::to_string(i) + "][" + std::to_string(c) + "]";
            a.set(i, c, element_from_json(row[c], group, mod, commutative, cell));
        }
    }
    return a;
}

json params_to_json(const PublicParams& params) {
    json j;
    j["schema_version"] = 1;
    j["kind"] = "params";
    j["p"] = dec(params.mod.value());
    j["group"] = params.group_spec ? group_to_json(*params.group_spec, *params.group)
                                   : json(nullptr);
    j["n"] = params.n;
    const bool c = params.commutative();
    j["M"] = matrix_to_json(params.M, c);
    j["H1"] = matrix_to_json(params.H1, c);
    j["H2"] = matrix_to_json(params.H2, c);
    return j;
}

PublicParams params_from_json(const json& j, const std::string& where) {
    check_header(j, "params", where);
    const std::uint64_t p = parse_u64(require(j, "p", where), where + ".p");
    if (!is_prime_u64(p)) fail(where + ".p", dec(p) + " is not prime");
    const PrimeModulus mod(p);

    std::optional<GroupSpec> spec;
    GroupPtr group;
    const json& gj = require(j, "group", where);
    if (gj.is_null()) {
        group = FiniteGroupTable::builtin("trivial");
    } else {
        auto [s, g] = group_from_json(gj, where + ".group");
        spec = std::move(s);
        group = std::move(g);
    }

    const std::size_t n = parse_count(require(j, "n", where), where + ".n");
    if (n == 0) fail(where + ".n", "matrix size must be at least 1");

    const bool c = !spec.has_value();
    GroupRingMatrix m = matrix_from_json(require(j, "M", where), group, mod, n, c, where + ".M");
    GroupRingMatrix h1 = matrix_from_json(require(j, "H1", where), group, mod, n, c, where + ".H1");
    GroupRingMatrix h2 = matrix_from_json(require(j, "H2", where), group, mod, n, c, where + ".H2");
    return PublicParams{mod, std::move(spec), std::move(group), n,
                        std::move(m), std::move(h1), std::move(h2)};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json timings_to_json(const StageTimings& t) {
    json j;
    j["telescope_s"] = t.telescope_s;
    j["build_s"] = t.build_s;
    j["solve_s"] = t.solve_s;
    j["recover_s"] = t.recover_s;
    j["total_s"] = t.total_s;
    return j;
}

} // namespace

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (const char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

std::string to_hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

GroupSpec parse_group_arg(const std::string& arg) {
    if (arg.empty()) throw InvalidInputError("empty group specification");
    if (arg[0] != '[') {
        GroupSpec spec;
        spec.name = arg;
        return spec;
    }
    json j = json::parse(arg, nullptr, false);
    if (j.is_discarded() || !j.is_array() || j.empty()) {
        throw InvalidInputError(
            "explicit group must be a non-empty JSON array of permutations");
    }
    GroupSpec spec;
    try {
        for (const json& g : j) spec.generators.push_back(permutation_from_json(g, "group"));
    } catch (const ParseError& e) {
        throw InvalidInputError(e.what());
    }
    spec.degree = spec.generators.front().size();
    for (const auto& g : spec.generators) {
        if (g.size() != spec.degree) {
            throw InvalidInputError("generators must all have the same degree");
        }
    }
    return spec;
}

void write_params(const std::filesystem::path& path, const PublicParams& params) {
    write_file(path, dump(params_to_json(params)));
}

PublicParams read_params(const std::filesystem::path& path) {
    const std::string where = path.string();
    return params_from_json(parse_json(read_file(path), where), where);
}

void write_transcript(const std::filesystem::path& path, const Transcript& t,
                      const std::string& params_path, bool include_private) {
    json j;
    j["schema_version"] = 1;
    j["kind"] = "transcript";
    json ref;
    ref["path"] = params_path;
    ref["hash"] = to_hex64(fnv1a64(read_file(params_path)));
    j["params_ref"] = ref;
    const bool c = t.params.commutative();
    j["A"] = matrix_to_json(t.A, c);
    j["B"] = matrix_to_json(t.B, c);
    if (include_private) {
        j["x"] = dec(t.x);
        j["y"] = dec(t.y);
        if (t.K) j["K"] = matrix_to_json(*t.K, c);
    }
    write_file(path, dump(j));
}

Transcript read_transcript(const std::filesystem::path& path) {
    const std::string where = path.string();
    const json j = parse_json(read_file(path), where);
    check_header(j, "transcript", where);

    const json& ref = require(j, "params_ref", where);
    const json& pj = require(ref, "path", where + ".params_ref");
    if (!pj.is_string()) fail(where + ".params_ref.path", "expected a string");
    const std::filesystem::path stated{pj.get<std::string>()};
    std::filesystem::path params_path = stated;
    if (stated.is_relative()) {
        const std::filesystem::path sibling = path.parent_path() / stated;
        if (std::filesystem::exists(sibling)) params_path = sibling;
    }
    const std::string params_bytes = read_file(params_path);

    const json& hj = require(ref, "hash", where + ".params_ref");
    if (!hj.is_string() || hj.get_ref<const std::string&>() != to_hex64(fnv1a64(params_bytes))) {
        throw VerificationError("params file does not match the hash recorded in " + where);
    }
    PublicParams params = params_from_json(parse_json(params_bytes, params_path.string()),
                                           params_path.string());

    const bool c = params.commutative();
    const GroupPtr group = params.group;
    const PrimeModulus mod = params.mod;
    const std::size_t n = params.n;
    GroupRingMatrix a = matrix_from_json(require(j, "A", where), group, mod, n, c, where + ".A");
    GroupRingMatrix b = matrix_from_json(require(j, "B", where), group, mod, n, c, where + ".B");
    std::optional<GroupRingMatrix> key;
    if (j.contains("K")) {
        key = matrix_from_json(j.at("K"), group, mod, n, c, where + ".K");
    }
    Transcript t{std::move(params), std::move(a), std::move(b), 0, 0, std::move(key)};
    if (j.contains("x")) t.x = parse_u64(j.at("x"), where + ".x");
    if (j.contains("y")) t.y = parse_u64(j.at("y"), where + ".y");
    return t;
}

void write_success_report(const std::filesystem::path& path, const PublicParams& params,
                          const AttackResult& result, std::optional<bool> match) {
    json j;
    j["schema_version"] = 1;
    j["kind"] = "report";
    j["success"] = true;
    j["system_size"] = result.system_size;
    json t = json::array();
    for (std::size_t i = 0; i < result.solution.size(); ++i) {
        t.push_back(dec(result.solution.at(i)));
    }
    j["t"] = t;
    j["recovered_K"] = matrix_to_json(result.recovered_key, params.commutative());
    if (match) j["match"] = *match;
    j["timings"] = timings_to_json(result.timings);
    write_file(path, dump(j));
}

void write_failure_report(const std::filesystem::path& path, std::size_t system_size,
                          const std::string& error) {
    json j;
    j["schema_version"] = 1;
    j["kind"] = "report";
    j["success"] = false;
    j["system_size"] = system_size;
    j["error"] = error;
    write_file(path, dump(j));
}

} // namespace makekex
