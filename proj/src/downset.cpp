#include "piecewise/downset.hpp"

#include "piecewise/errors.hpp"

namespace piecewise {

bool WordSet::insert(const Word& w) {
    if (!(*w.alphabet_ref() == *alphabet_)) {
        throw std::invalid_argument("WordSet::insert: word uses a different alphabet");
    }
    std::string key(w.letters().begin(), w.letters().end());
    return items_.insert(std::move(key)).second;
}

bool WordSet::contains(const Word& w) const {
    std::string key(w.letters().begin(), w.letters().end());
    return items_.count(key) > 0;
}

std::vector<Word> WordSet::words() const {
    std::vector<Word> out;
    out.reserve(items_.size());
    for (const auto& key : items_) {
        out.emplace_back(alphabet_, std::vector<uint8_t>(key.begin(), key.end()));
    }
    return out;
}

WordSet downset_upto(const Word& u, uint64_t k, size_t budget) {
    WordSet set(u.alphabet_ref());
    set.insert_raw("");
    // Subwords of w·a are the subwords of w plus those extended by a.
    std::vector<std::string> extended;
    for (uint8_t a : u.letters()) {
        extended.clear();
        for (const auto& s : set.raw()) {
            if (s.size() < k) {
                extended.push_back(s + static_cast<char>(a));
            }
        }
        for (auto& s : extended) {
            set.insert_raw(std::move(s));
            if (set.size() > budget) {
                throw resource_error("subword enumeration exceeds budget of " +
                                     std::to_string(budget) + " stored subwords");
            }
        }
    }
    return set;
}

bool sim_k(const Word& u, const Word& v, uint64_t k, size_t budget) {
    require_same_alphabet(u, v, "sim_k");
    return downset_upto(u, k, budget) == downset_upto(v, k, budget);
}

}  // namespace piecewise
