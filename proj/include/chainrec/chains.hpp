#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chainrec/error.hpp"

namespace chainrec {

/// One sharing platform. Ids are dense 0..|S|-1 within a PlatformSet.
struct Platform {
    int id = 0;
    std::string name;
};

/// The configured set S of platforms; owns the id <-> name mapping.
class PlatformSet {
public:
    PlatformSet() = default;
    explicit PlatformSet(const std::vector<std::string>& names);

    std::size_t size() const { return platforms_.size(); }
    const Platform& at(int id) const;
    const std::vector<Platform>& all() const { return platforms_; }
    std::optional<int> id_of(const std::string& name) const;

    bool operator==(const PlatformSet& o) const;

private:
    std::vector<Platform> platforms_;
    std::map<std::string, int> by_name_;
};

/// A sharing chain: platform ids stored oldest-first. Indexing follows the
/// reverse convention, at_reverse(0) = newest (last) sharing step.
class SharingChain {
public:
    SharingChain() = default;
    explicit SharingChain(std::vector<int> steps_oldest_first)
        : steps_(std::move(steps_oldest_first)) {}

    std::size_t length() const { return steps_.size(); }
    bool empty() const { return steps_.empty(); }

    // C[-k]; k = 0 is the newest step.
    int at_reverse(std::size_t k) const;
    int newest() const { return at_reverse(0); }
    int oldest() const;

    const std::vector<int>& steps() const { return steps_; }

    SharingChain prepended(int platform_id) const;
    /// Newest target_len steps; the chain itself if already shorter.
    SharingChain newest_suffix(std::size_t target_len) const;

    bool operator==(const SharingChain& o) const { return steps_ == o.steps_; }
    bool operator!=(const SharingChain& o) const { return steps_ != o.steps_; }
    // Canonical order: shorter first, then lexicographic oldest-first by id.
    bool operator<(const SharingChain& o) const;

private:
    std::vector<int> steps_;
};

/// Label grammar: NAME ('>' NAME)*, oldest-first, e.g. "TW>FB" (C[0]=FB).
SharingChain parse_chain_label(const std::string& text, const PlatformSet& platforms,
                               std::size_t max_len);
std::string format_chain_label(const SharingChain& chain, const PlatformSet& platforms);

/// Bidirectional chain <-> dense class index over one label space.
class ChainClassIndex {
public:
    ChainClassIndex() = default;
    explicit ChainClassIndex(std::vector<SharingChain> classes);

    std::size_t size() const { return classes_.size(); }
    const SharingChain& chain_of(int index) const;
    int index_of(const SharingChain& chain) const;
    const std::vector<SharingChain>& classes() const { return classes_; }

private:
    std::vector<SharingChain> classes_;
    std::map<std::vector<int>, int> index_;
};

/// All chains over S of length 1..max_len, in canonical order.
class ChainUniverse {
public:
    ChainUniverse() = default;
    ChainUniverse(PlatformSet platforms, std::size_t max_len);

    const PlatformSet& platforms() const { return platforms_; }
    std::size_t max_len() const { return max_len_; }

    /// Chains of length exactly len, lexicographic oldest-first.
    const std::vector<SharingChain>& chains_of_len(std::size_t len) const;
    /// Omega_len: all chains of length 1..len, canonical order.
    std::vector<SharingChain> omega(std::size_t len) const;
    std::size_t omega_size(std::size_t len) const;

    /// Dense class index over Omega_max_len.
    ChainClassIndex class_index() const;
    /// Dense class index over Omega_len for len <= max_len.
    ChainClassIndex class_index(std::size_t len) const;

    /// {c} u B(c): c first, then extensions ordered by prepended platform id.
    std::vector<SharingChain> backtrack_candidates(const SharingChain& chain) const;

    bool contains(const SharingChain& chain) const;

private:
    PlatformSet platforms_;
    std::size_t max_len_ = 0;
    std::vector<std::vector<SharingChain>> by_len_;  // [len-1]
};

ChainUniverse enumerate_universe(const PlatformSet& platforms, std::size_t max_len);

/// Newest target_len steps of c (c unchanged if shorter).
SharingChain remap_label(const SharingChain& chain, std::size_t target_len);

/// Truncate so the newest occurrence of stop_platform becomes the oldest
/// retained step; chains without stop_platform (or with it only at the
/// oldest position) are unchanged.
SharingChain collapse_chain(const SharingChain& chain, int stop_platform);

/// Label space reachable by the informed cascade: every chain of the
/// universe mapped through collapse_chain, deduplicated, canonical order.
ChainClassIndex collapse_informed(const ChainUniverse& universe, int stop_platform);

}  // namespace chainrec
