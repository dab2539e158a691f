#include "scrollsmith/atlas.hpp"

#include "scrollsmith/json_io.hpp"

#include <algorithm>
#include <array>
#include <exception>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <thread>

namespace scrollsmith {

ScrollInvariants scroll_invariants(const ExtensionBundle& E) {
    const ChernClasses c = chern_classes(E);
    ScrollInvariants inv;
    inv.degree = sub_ck(intersect(c.c1, c.c1, E.base), c.c2);
    const i64 pairing = intersect(canonical_class(E.base) + c.c1, c.c1, E.base);
    if (pairing % 2 != 0) {
        throw std::logic_error("scroll_invariants: odd adjunction pairing");
    }
    inv.sectional_genus = add_ck(1, pairing / 2);
    const BaseKind kind = E.base.kind();
    if (kind == BaseKind::ProjectivePlane || kind == BaseKind::RationalRuled) {
        const DivisorClass zero =
            kind == BaseKind::ProjectivePlane ? DivisorClass::plane(0) : DivisorClass::ruled(0, 0);
        const CohomologyBound b = h0_bundle_twist(E, zero);
        if (b.exact) inv.ambient_dim = sub_ck(b.h0.lo, 1);
    }
    return inv;
}

namespace {

// mixed-radix decoding of a flat tuple index over the box ranges
struct TupleSpace {
    const SearchBox& box;
    std::array<IndexRange, 7> dims; // e, a_l, b_l, a_m, b_m, w, lm
    i64 total = 1;

    explicit TupleSpace(const SearchBox& b)
        : box(b), dims{b.e, b.a_l, b.b_l, b.a_m, b.b_m, b.w, b.lm} {
        for (const auto& d : dims) total = mul_ck(total, d.size());
        if (total > 20'000'000) {
            throw std::domain_error("search box spans more than 2e7 tuples; shrink a range");
        }
    }

    std::array<i64, 7> decode(i64 idx) const {
        std::array<i64, 7> v{};
        for (int k = 6; k >= 0; --k) {
            const i64 sz = dims[static_cast<size_t>(k)].size();
            v[static_cast<size_t>(k)] = dims[static_cast<size_t>(k)].lo + idx % sz;
            idx /= sz;
        }
        return v;
    }
};

struct ChunkResult {
    std::vector<CatalogEntry> entries;
    i64 scanned = 0;
    i64 searched = 0;
};

ChunkResult scan_range(const TupleSpace& space, i64 begin, i64 end, bool with_timestamps) {
    const SearchBox& box = space.box;
    ChunkResult out;
    for (i64 idx = begin; idx < end; ++idx) {
        ++out.scanned;
        const auto [e, a_l, b_l, a_m, b_m, w, lm] = space.decode(idx);
        if (w == 0 && lm != box.lm.lo) continue; // lm is irrelevant without points
        if (w >= 1 && (lm < 1 || lm > w)) continue;

        RuledBase base = RuledBase::projective_plane();
        try {
            base = box.base_kind == BaseKind::RationalRuled
                       ? RuledBase::rational(e)
                       : RuledBase::elliptic(e, box.decomposable);
        } catch (const std::domain_error&) {
            continue; // e outside the base's invariant range
        }

        std::optional<ExtensionBundle> maybe;
        try {
            maybe = make_extension_bundle(base, DivisorClass::ruled(a_l, b_l),
                                          DivisorClass::ruled(a_m, b_m), w,
                                          w >= 1 ? lm : 1, box.general_position);
        } catch (const std::domain_error&) {
            continue; // construction rejected the tuple
        }
        const ExtensionBundle& E = *maybe;

        // fibre-degree screen: the second numerical condition is independent
        // of (x, z), so tuples violating it can never produce a witness
        if (a_l < 1 || a_m <= E.lm_effective()) continue;

        ++out.searched;
        WitnessSearch found =
            box.x_max > 0 && box.z_max > 0
                ? search_valma_witness(E, box.x_max, box.z_max)
                : search_valma_witness(E);
        if (!found.witness) continue;

        CatalogEntry entry{E,
                           box.base_kind == BaseKind::RationalRuled ? "valma" : "valmae",
                           found.witness,
                           scroll_invariants(E),
                           std::nullopt,
                           with_timestamps ? std::optional<std::string>(iso8601_now_utc())
                                           : std::nullopt,
                           ""};
        entry.digest = digest_for(entry);
        out.entries.push_back(std::move(entry));
    }
    return out;
}

} // namespace

SearchOutcome enumerate_candidates(const SearchBox& box, int jobs, bool with_timestamps) {
    if (jobs < 1) throw std::domain_error("enumerate_candidates: jobs must be >= 1");
    const TupleSpace space(box);
    SearchOutcome out;
    if (space.total == 0) return out;

    const i64 njobs = std::min<i64>(jobs, space.total);
    std::vector<ChunkResult> results(static_cast<size_t>(njobs));
    std::vector<std::exception_ptr> errors(static_cast<size_t>(njobs));
    std::vector<std::thread> threads;
    const i64 chunk = (space.total + njobs - 1) / njobs;
    for (i64 t = 0; t < njobs; ++t) {
        const i64 begin = t * chunk;
        const i64 end = std::min(space.total, begin + chunk);
        threads.emplace_back([&, t, begin, end]() {
            try {
                results[static_cast<size_t>(t)] = scan_range(space, begin, end, with_timestamps);
            } catch (...) {
                errors[static_cast<size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& th : threads) th.join();
    for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
    // chunks are contiguous index ranges, so concatenation preserves tuple order
    for (auto& r : results) {
        out.tuples_scanned = add_ck(out.tuples_scanned, r.scanned);
        out.bundles_searched = add_ck(out.bundles_searched, r.searched);
        for (auto& e : r.entries) out.entries.push_back(std::move(e));
    }
    return out;
}

CatalogEntry corollary_p2_entry() {
    const ExtensionBundle E = make_extension_bundle(
        RuledBase::projective_plane(), DivisorClass::plane(1), DivisorClass::plane(4), 10, 1,
        true, "ten-point-plane-bundle");
    CatalogEntry entry{E,
                       "uno-b",
                       std::nullopt,
                       scroll_invariants(E),
                       std::string("the family of these scrolls is smooth of dimension 83 "
                                   "at this point"),
                       std::nullopt,
                       ""};
    entry.digest = digest_for(entry);
    return entry;
}

Catalog::Catalog(std::string path) : path_(std::move(path)) {}

void Catalog::load_keys() const {
    if (keys_loaded_) return;
    keys_loaded_ = true;
    std::ifstream in(path_);
    if (!in) return; // no file yet: empty catalog
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            const ordered_json j = parse_json_text(line, path_);
            const CatalogEntry e = entry_from_json(j, "entry");
            keys_.insert(dedup_key(e.bundle, e.criterion));
        } catch (const std::exception&) {
            // corrupt lines are counted by query(); for dedup they hold no key
        }
    }
}

Catalog::AppendResult Catalog::append(const CatalogEntry& entry) {
    load_keys();
    const std::string key = dedup_key(entry.bundle, entry.criterion);
    if (keys_.count(key)) return AppendResult::Duplicate;
    std::ofstream out(path_, std::ios::app);
    if (!out) throw std::runtime_error("catalog: cannot open '" + path_ + "' for append");
    CatalogEntry copy = entry;
    if (copy.digest.empty()) copy.digest = digest_for(copy);
    out << entry_to_json(copy, false).dump() << "\n";
    if (!out) throw std::runtime_error("catalog: write to '" + path_ + "' failed");
    keys_.insert(key);
    return AppendResult::Appended;
}

Catalog::QueryResult Catalog::query(const QueryFilter& filter) const {
    QueryResult res;
    std::ifstream in(path_);
    if (!in) return res;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::optional<CatalogEntry> parsed;
        try {
            parsed = entry_from_json(parse_json_text(line, path_), "entry");
        } catch (const std::exception&) {
            ++res.corrupt_lines_skipped;
            continue;
        }
        CatalogEntry& e = *parsed;
        if (filter.degree_min && e.invariants.degree < *filter.degree_min) continue;
        if (filter.degree_max && e.invariants.degree > *filter.degree_max) continue;
        if (filter.genus_min && e.invariants.sectional_genus < *filter.genus_min) continue;
        if (filter.genus_max && e.invariants.sectional_genus > *filter.genus_max) continue;
        if (filter.base_label && e.bundle.base.label() != *filter.base_label) continue;
        if (filter.criterion && e.criterion != *filter.criterion) continue;
        res.entries.push_back(std::move(e));
    }
    return res;
}

} // namespace scrollsmith
