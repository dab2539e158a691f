#pragma once

#include "criteria.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace scrollsmith {

struct ScrollInvariants {
    i64 degree = 0;          // c1^2 - c2
    i64 sectional_genus = 0; // 1 + (K + c1).c1 / 2
    // h0(E) - 1, only when the section count is certified exact
    std::optional<i64> ambient_dim;
};

ScrollInvariants scroll_invariants(const ExtensionBundle& E);

struct CatalogEntry {
    ExtensionBundle bundle;
    std::string criterion;
    std::optional<Witness> witness;
    ScrollInvariants invariants;
    std::optional<std::string> note;
    std::optional<std::string> timestamp; // ISO 8601 UTC; absent in deterministic runs
    std::string digest;                   // FNV-1a over the canonical entry
};

// Inclusive integer range; hi < lo denotes an empty range.
struct IndexRange {
    i64 lo = 0;
    i64 hi = -1;
    i64 size() const { return hi < lo ? 0 : hi - lo + 1; }
};

// Parameter box for the catalog search: extension data ranges over one kind
// of base.  x_max / z_max <= 0 select the default witness window.
struct SearchBox {
    BaseKind base_kind = BaseKind::RationalRuled; // RationalRuled or EllipticRuled
    IndexRange e;
    bool decomposable = true; // elliptic bases only
    IndexRange a_l, b_l, a_m, b_m, w, lm;
    bool general_position = false;
    i64 x_max = 0;
    i64 z_max = 0;
};

struct SearchOutcome {
    std::vector<CatalogEntry> entries; // in tuple order, deterministic
    i64 tuples_scanned = 0;
    i64 bundles_searched = 0; // tuples surviving validity + fibre-degree screen
};

// Scans every tuple in the box in lexicographic order, runs the witness
// search on each well-formed bundle, and returns certified entries.  jobs > 1
// partitions the tuple index space; the merge preserves tuple order.
SearchOutcome enumerate_candidates(const SearchBox& box, int jobs = 1,
                                   bool with_timestamps = false);

// Canned entry for the ten-general-points plane bundle (degree-11 scroll in
// P7), with its deformation-count note.
CatalogEntry corollary_p2_entry();

// Append-only JSONL store of certified entries, deduplicated by the pair
// (canonical bundle, criterion).
class Catalog {
public:
    explicit Catalog(std::string path);

    enum class AppendResult { Appended, Duplicate };
    AppendResult append(const CatalogEntry& entry);

    struct QueryFilter {
        std::optional<i64> degree_min, degree_max;
        std::optional<i64> genus_min, genus_max;
        std::optional<std::string> base_label; // exact match, e.g. "F1"
        std::optional<std::string> criterion;
    };
    struct QueryResult {
        std::vector<CatalogEntry> entries;
        i64 corrupt_lines_skipped = 0;
    };
    QueryResult query(const QueryFilter& filter) const;

    const std::string& path() const { return path_; }

private:
    void load_keys() const;
    std::string path_;
    mutable bool keys_loaded_ = false;
    mutable std::set<std::string> keys_;
};

} // namespace scrollsmith
