#include "scrollsmith/json_io.hpp"

#include <cstdint>
#include <ctime>
#include <stdexcept>

namespace scrollsmith {

namespace {

const ordered_json& require_field(const ordered_json& j, const char* key,
                                  const std::string& path) {
    if (!j.is_object()) throw std::runtime_error(path + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw std::runtime_error(path + "." + key + ": missing");
    return *it;
}

const ordered_json* optional_field(const ordered_json& j, const char* key,
                                   const std::string& path) {
    if (!j.is_object()) throw std::runtime_error(path + ": expected an object");
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return nullptr;
    return &*it;
}

i64 as_int(const ordered_json& j, const std::string& path) {
    if (!j.is_number_integer()) throw std::runtime_error(path + ": expected an integer");
    return j.get<i64>();
}

bool as_bool(const ordered_json& j, const std::string& path) {
    if (!j.is_boolean()) throw std::runtime_error(path + ": expected a boolean");
    return j.get<bool>();
}

std::string as_string(const ordered_json& j, const std::string& path) {
    if (!j.is_string()) throw std::runtime_error(path + ": expected a string");
    return j.get<std::string>();
}

} // namespace

ordered_json parse_json_text(const std::string& text, const std::string& origin) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::runtime_error(origin + ": invalid JSON");
    return j;
}

ordered_json base_to_json(const RuledBase& base) {
    ordered_json j;
    switch (base.kind()) {
    case BaseKind::ProjectivePlane:
        j["kind"] = "plane";
        break;
    case BaseKind::RationalRuled:
        j["kind"] = "rational";
        j["e"] = base.e();
        break;
    case BaseKind::EllipticRuled:
        j["kind"] = "elliptic";
        j["e"] = base.e();
        j["decomposable"] = base.decomposable();
        break;
    case BaseKind::GenusGRuled:
        j["kind"] = "genus_g";
        j["g"] = base.genus();
        j["e"] = base.e();
        break;
    }
    return j;
}

RuledBase base_from_json(const ordered_json& j, const std::string& path) {
    const std::string kind = as_string(require_field(j, "kind", path), path + ".kind");
    try {
        if (kind == "plane") return RuledBase::projective_plane();
        if (kind == "rational") {
            return RuledBase::rational(as_int(require_field(j, "e", path), path + ".e"));
        }
        if (kind == "elliptic") {
            const i64 e = as_int(require_field(j, "e", path), path + ".e");
            bool dec = true;
            if (const auto* d = optional_field(j, "decomposable", path)) {
                dec = as_bool(*d, path + ".decomposable");
            }
            return RuledBase::elliptic(e, dec);
        }
        if (kind == "genus_g") {
            return RuledBase::genus_g(as_int(require_field(j, "g", path), path + ".g"),
                                      as_int(require_field(j, "e", path), path + ".e"));
        }
    } catch (const std::domain_error& err) {
        throw std::runtime_error(path + ": " + err.what());
    }
    throw std::runtime_error(path + ".kind: unknown base kind '" + kind + "'");
}

ordered_json divisor_to_json(const DivisorClass& d) {
    if (d.on_plane()) return ordered_json(d.degree());
    return ordered_json::array({d.a(), d.b()});
}

DivisorClass divisor_from_json(const ordered_json& j, bool plane, const std::string& path) {
    if (plane) return DivisorClass::plane(as_int(j, path));
    if (!j.is_array() || j.size() != 2) {
        throw std::runtime_error(path + ": expected [a, b] for a ruled class");
    }
    return DivisorClass::ruled(as_int(j[0], path + "[0]"), as_int(j[1], path + "[1]"));
}

ordered_json bundle_to_json(const ExtensionBundle& E) {
    ordered_json j;
    j["base"] = base_to_json(E.base);
    j["L"] = divisor_to_json(E.L);
    j["M"] = divisor_to_json(E.M);
    j["w"] = E.w;
    j["lm"] = E.lm;
    j["general_position"] = E.general_position;
    if (!E.label.empty()) j["label"] = E.label;
    j["existence"] = to_token(E.existence);
    return j;
}

ExtensionBundle bundle_from_json(const ordered_json& j, const std::string& path) {
    const RuledBase base = base_from_json(require_field(j, "base", path), path + ".base");
    const bool plane = base.kind() == BaseKind::ProjectivePlane;
    const DivisorClass L = divisor_from_json(require_field(j, "L", path), plane, path + ".L");
    const DivisorClass M = divisor_from_json(require_field(j, "M", path), plane, path + ".M");
    i64 w = 0, lm = 1;
    bool gp = false;
    std::string label;
    if (const auto* f = optional_field(j, "w", path)) w = as_int(*f, path + ".w");
    if (const auto* f = optional_field(j, "lm", path)) lm = as_int(*f, path + ".lm");
    if (const auto* f = optional_field(j, "general_position", path)) {
        gp = as_bool(*f, path + ".general_position");
    }
    if (const auto* f = optional_field(j, "label", path)) label = as_string(*f, path + ".label");
    try {
        return make_extension_bundle(base, L, M, w, lm, gp, std::move(label));
    } catch (const std::domain_error& err) {
        throw std::runtime_error(path + ": " + err.what());
    }
}

ordered_json report_to_json(const ConditionReport& r) {
    ordered_json j;
    j["v"] = 1;
    j["criterion"] = r.criterion;
    j["kind"] = to_token(r.kind);
    j["citation"] = r.citation;
    j["verdict"] = to_token(r.verdict);
    ordered_json conds = ordered_json::array();
    for (const auto& c : r.conditions) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["status"] = to_token(c.status);
        jc["detail"] = c.detail;
        conds.push_back(std::move(jc));
    }
    j["conditions"] = std::move(conds);
    if (r.witness) {
        j["witness"] = ordered_json{{"x", r.witness->x}, {"z", r.witness->z}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

ordered_json entry_to_json(const CatalogEntry& entry, bool canonical) {
    ordered_json j;
    j["v"] = 1;
    j["bundle"] = bundle_to_json(entry.bundle);
    j["criterion"] = entry.criterion;
    if (entry.witness) {
        j["witness"] = ordered_json{{"x", entry.witness->x}, {"z", entry.witness->z}};
    } else {
        j["witness"] = nullptr;
    }
    ordered_json inv;
    inv["degree"] = entry.invariants.degree;
    inv["sectional_genus"] = entry.invariants.sectional_genus;
    if (entry.invariants.ambient_dim) {
        inv["ambient_dim"] = *entry.invariants.ambient_dim;
    } else {
        inv["ambient_dim"] = nullptr;
    }
    inv["base"] = entry.bundle.base.label();
    j["invariants"] = std::move(inv);
    if (entry.note) j["note"] = *entry.note;
    if (!canonical) {
        j["timestamp"] = entry.timestamp ? ordered_json(*entry.timestamp) : ordered_json(nullptr);
        j["digest"] = entry.digest;
    }
    return j;
}

CatalogEntry entry_from_json(const ordered_json& j, const std::string& path) {
    CatalogEntry e{bundle_from_json(require_field(j, "bundle", path), path + ".bundle"),
                   as_string(require_field(j, "criterion", path), path + ".criterion"),
                   std::nullopt,
                   {},
                   std::nullopt,
                   std::nullopt,
                   ""};
    if (const auto* w = optional_field(j, "witness", path)) {
        e.witness = Witness{as_int(require_field(*w, "x", path + ".witness"), path + ".witness.x"),
                            as_int(require_field(*w, "z", path + ".witness"), path + ".witness.z")};
    }
    const ordered_json& inv = require_field(j, "invariants", path);
    e.invariants.degree = as_int(require_field(inv, "degree", path + ".invariants"),
                                 path + ".invariants.degree");
    e.invariants.sectional_genus =
        as_int(require_field(inv, "sectional_genus", path + ".invariants"),
               path + ".invariants.sectional_genus");
    if (const auto* a = optional_field(inv, "ambient_dim", path + ".invariants")) {
        e.invariants.ambient_dim = as_int(*a, path + ".invariants.ambient_dim");
    }
    if (const auto* n = optional_field(j, "note", path)) e.note = as_string(*n, path + ".note");
    if (const auto* t = optional_field(j, "timestamp", path)) {
        e.timestamp = as_string(*t, path + ".timestamp");
    }
    if (const auto* d = optional_field(j, "digest", path)) {
        e.digest = as_string(*d, path + ".digest");
    }
    return e;
}

std::string digest_for(const CatalogEntry& entry) {
    const std::string canon = entry_to_json(entry, true).dump();
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string out = "fnv1a:";
    for (int shift = 60; shift >= 0; shift -= 4) {
        out += hex[(h >> shift) & 0xF];
    }
    return out;
}

std::string dedup_key(const ExtensionBundle& bundle, const std::string& criterion) {
    return bundle_to_json(bundle).dump() + "|" + criterion;
}

namespace {

IndexRange range_from_json(const ordered_json& j, const std::string& path) {
    if (j.is_number_integer()) {
        const i64 v = j.get<i64>();
        return {v, v};
    }
    if (!j.is_array() || j.size() != 2) {
        throw std::runtime_error(path + ": expected [lo, hi] or a single integer");
    }
    return {as_int(j[0], path + "[0]"), as_int(j[1], path + "[1]")};
}

} // namespace

SearchBox box_from_json(const ordered_json& j, const std::string& path) {
    SearchBox box;
    const std::string kind = as_string(require_field(j, "base_kind", path), path + ".base_kind");
    if (kind == "rational") {
        box.base_kind = BaseKind::RationalRuled;
    } else if (kind == "elliptic") {
        box.base_kind = BaseKind::EllipticRuled;
    } else {
        throw std::runtime_error(path + ".base_kind: expected 'rational' or 'elliptic'");
    }
    box.e = range_from_json(require_field(j, "e", path), path + ".e");
    if (const auto* d = optional_field(j, "decomposable", path)) {
        box.decomposable = as_bool(*d, path + ".decomposable");
    }
    box.a_l = range_from_json(require_field(j, "a_l", path), path + ".a_l");
    box.b_l = range_from_json(require_field(j, "b_l", path), path + ".b_l");
    box.a_m = range_from_json(require_field(j, "a_m", path), path + ".a_m");
    box.b_m = range_from_json(require_field(j, "b_m", path), path + ".b_m");
    box.w = range_from_json(require_field(j, "w", path), path + ".w");
    if (const auto* f = optional_field(j, "lm", path)) {
        box.lm = range_from_json(*f, path + ".lm");
    } else {
        box.lm = {1, 1};
    }
    if (const auto* f = optional_field(j, "general_position", path)) {
        box.general_position = as_bool(*f, path + ".general_position");
    }
    if (const auto* f = optional_field(j, "x_max", path)) {
        box.x_max = as_int(*f, path + ".x_max");
    }
    if (const auto* f = optional_field(j, "z_max", path)) {
        box.z_max = as_int(*f, path + ".z_max");
    }
    return box;
}

std::string iso8601_now_utc() {
    const std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

} // namespace scrollsmith
