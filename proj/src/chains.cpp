#include "chainrec/chains.hpp"

#include <algorithm>
#include <set>

namespace chainrec {

PlatformSet::PlatformSet(const std::vector<std::string>& names) {
    if (names.empty()) throw InvalidArgument("platform set must not be empty");
    platforms_.reserve(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        const std::string& name = names[i];
        if (name.empty()) throw InvalidArgument("platform name must not be empty");
        for (char c : name) {
            if (c == '>' || c == ' ' || c == '\t' || c == '\n' || c == '\r')
                throw InvalidArgument("platform name '" + name + "' contains '>' or whitespace");
        }
        if (!by_name_.emplace(name, static_cast<int>(i)).second)
            throw InvalidArgument("duplicate platform name '" + name + "'");
        platforms_.push_back(Platform{static_cast<int>(i), name});
    }
}

const Platform& PlatformSet::at(int id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= platforms_.size())
        throw InvalidArgument("platform id " + std::to_string(id) + " out of range");
    return platforms_[static_cast<std::size_t>(id)];
}

std::optional<int> PlatformSet::id_of(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

bool PlatformSet::operator==(const PlatformSet& o) const {
    if (platforms_.size() != o.platforms_.size()) return false;
    for (std::size_t i = 0; i < platforms_.size(); ++i)
        if (platforms_[i].name != o.platforms_[i].name) return false;
    return true;
}

int SharingChain::at_reverse(std::size_t k) const {
    if (k >= steps_.size())
        throw InvalidArgument("reverse index " + std::to_string(k) + " out of range for chain of length " +
                              std::to_string(steps_.size()));
    return steps_[steps_.size() - 1 - k];
}

int SharingChain::oldest() const {
    if (steps_.empty()) throw InvalidArgument("empty chain has no oldest step");
    return steps_.front();
}

SharingChain SharingChain::prepended(int platform_id) const {
    std::vector<int> steps;
    steps.reserve(steps_.size() + 1);
    steps.push_back(platform_id);
    steps.insert(steps.end(), steps_.begin(), steps_.end());
    return SharingChain(std::move(steps));
}

SharingChain SharingChain::newest_suffix(std::size_t target_len) const {
    if (steps_.size() <= target_len) return *this;
    return SharingChain(std::vector<int>(steps_.end() - static_cast<std::ptrdiff_t>(target_len), steps_.end()));
}

bool SharingChain::operator<(const SharingChain& o) const {
    if (steps_.size() != o.steps_.size()) return steps_.size() < o.steps_.size();
    return steps_ < o.steps_;
}

SharingChain parse_chain_label(const std::string& text, const PlatformSet& platforms,
                               std::size_t max_len) {
    if (text.empty()) throw InvalidArgument("empty chain label");
    std::vector<int> steps;
    std::size_t start = 0;
    for (;;) {
        const std::size_t sep = text.find('>', start);
        const std::string token =
            sep == std::string::npos ? text.substr(start) : text.substr(start, sep - start);
        const auto id = platforms.id_of(token);
        if (!id) throw InvalidArgument("unknown platform '" + token + "' in chain label '" + text + "'");
        steps.push_back(*id);
        if (sep == std::string::npos) break;
        start = sep + 1;
    }
    if (steps.size() > max_len)
        throw InvalidArgument("chain label '" + text + "' longer than maximum length " +
                              std::to_string(max_len));
    return SharingChain(std::move(steps));
}

std::string format_chain_label(const SharingChain& chain, const PlatformSet& platforms) {
    if (chain.empty()) throw InvalidArgument("cannot format an empty chain");
    std::string out;
    for (std::size_t i = 0; i < chain.length(); ++i) {
        if (i > 0) out += '>';
        out += platforms.at(chain.steps()[i]).name;
    }
    return out;
}

ChainClassIndex::ChainClassIndex(std::vector<SharingChain> classes) : classes_(std::move(classes)) {
    for (std::size_t i = 0; i < classes_.size(); ++i) {
        if (!index_.emplace(classes_[i].steps(), static_cast<int>(i)).second)
            throw InvalidArgument("duplicate chain in class index");
    }
}

const SharingChain& ChainClassIndex::chain_of(int index) const {
    if (index < 0 || static_cast<std::size_t>(index) >= classes_.size())
        throw InvalidArgument("class index " + std::to_string(index) + " out of range");
    return classes_[static_cast<std::size_t>(index)];
}

int ChainClassIndex::index_of(const SharingChain& chain) const {
    auto it = index_.find(chain.steps());
    if (it == index_.end()) throw InvalidArgument("chain not present in class index");
    return it->second;
}

ChainUniverse::ChainUniverse(PlatformSet platforms, std::size_t max_len)
    : platforms_(std::move(platforms)), max_len_(max_len) {
    if (platforms_.size() == 0) throw InvalidArgument("platform set must not be empty");
    if (max_len_ == 0) throw InvalidArgument("maximum chain length must be at least 1");
    const std::size_t n = platforms_.size();
    by_len_.resize(max_len_);
    std::vector<SharingChain> current;  // length ell, lexicographic
    for (std::size_t id = 0; id < n; ++id) current.emplace_back(std::vector<int>{static_cast<int>(id)});
    by_len_[0] = current;
    for (std::size_t len = 2; len <= max_len_; ++len) {
        std::vector<SharingChain> next;
        next.reserve(current.size() * n);
        // Oldest step varies slowest, so extend on the right (newest side).
        for (const auto& c : current) {
            for (std::size_t id = 0; id < n; ++id) {
                std::vector<int> steps = c.steps();
                steps.push_back(static_cast<int>(id));
                next.emplace_back(std::move(steps));
            }
        }
        by_len_[len - 1] = next;
        current = std::move(next);
    }
}

const std::vector<SharingChain>& ChainUniverse::chains_of_len(std::size_t len) const {
    if (len == 0 || len > max_len_)
        throw InvalidArgument("chain length " + std::to_string(len) + " outside 1.." +
                              std::to_string(max_len_));
    return by_len_[len - 1];
}

std::vector<SharingChain> ChainUniverse::omega(std::size_t len) const {
    if (len == 0 || len > max_len_)
        throw InvalidArgument("omega length " + std::to_string(len) + " outside 1.." +
                              std::to_string(max_len_));
    std::vector<SharingChain> all;
    all.reserve(omega_size(len));
    for (std::size_t l = 1; l <= len; ++l)
        all.insert(all.end(), by_len_[l - 1].begin(), by_len_[l - 1].end());
    return all;
}

std::size_t ChainUniverse::omega_size(std::size_t len) const {
    std::size_t total = 0;
    for (std::size_t l = 1; l <= len && l <= max_len_; ++l) total += by_len_[l - 1].size();
    return total;
}

ChainClassIndex ChainUniverse::class_index() const { return class_index(max_len_); }

ChainClassIndex ChainUniverse::class_index(std::size_t len) const {
    return ChainClassIndex(omega(len));
}

std::vector<SharingChain> ChainUniverse::backtrack_candidates(const SharingChain& chain) const {
    if (chain.empty()) throw InvalidArgument("cannot backtrack from an empty chain");
    if (chain.length() >= max_len_)
        throw InvalidArgument("chain already at maximum length " + std::to_string(max_len_) +
                              "; no further backtracking possible");
    if (!contains(chain)) throw InvalidArgument("chain uses platforms outside the configured set");
    std::vector<SharingChain> out;
    out.reserve(platforms_.size() + 1);
    out.push_back(chain);
    for (const auto& p : platforms_.all()) out.push_back(chain.prepended(p.id));
    return out;
}

bool ChainUniverse::contains(const SharingChain& chain) const {
    if (chain.empty() || chain.length() > max_len_) return false;
    for (int id : chain.steps())
        if (id < 0 || static_cast<std::size_t>(id) >= platforms_.size()) return false;
    return true;
}

ChainUniverse enumerate_universe(const PlatformSet& platforms, std::size_t max_len) {
    return ChainUniverse(platforms, max_len);
}

SharingChain remap_label(const SharingChain& chain, std::size_t target_len) {
    if (target_len == 0) throw InvalidArgument("remap target length must be at least 1");
    return chain.newest_suffix(target_len);
}

SharingChain collapse_chain(const SharingChain& chain, int stop_platform) {
    const auto& steps = chain.steps();
    for (std::size_t k = 0; k < steps.size(); ++k) {
        // Reverse index k: the newest occurrence wins.
        if (steps[steps.size() - 1 - k] == stop_platform) return chain.newest_suffix(k + 1);
    }
    return chain;
}

ChainClassIndex collapse_informed(const ChainUniverse& universe, int stop_platform) {
    universe.platforms().at(stop_platform);  // range check
    std::set<SharingChain> collapsed;
    for (const auto& c : universe.omega(universe.max_len()))
        collapsed.insert(collapse_chain(c, stop_platform));
    return ChainClassIndex(std::vector<SharingChain>(collapsed.begin(), collapsed.end()));
}

}  // namespace chainrec
