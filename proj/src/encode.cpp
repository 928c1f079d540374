#include "heegaard/encode.hpp"

#include <algorithm>
#include <limits>

namespace heegaard {

namespace {

constexpr unsigned __int128 kSaturated = ~static_cast<unsigned __int128>(0);

void require_encodable(const Presentation& p) {
    const auto diagnostics = validate_for_encoding(p);
    if (diagnostics.empty()) return;
    std::string message = "presentation cannot be encoded: ";
    for (std::size_t i = 0; i < diagnostics.size(); ++i) {
        if (i > 0) message += "; ";
        message += diagnostics[i].message;
    }
    throw ValidationError(message);
}

} // namespace

void ClassSize::multiply(std::uint64_t factor) {
    if (saturated || factor == 0) {
        if (factor == 0) value = 0, saturated = false;
        return;
    }
    if (factor > 1 && value > kSaturated / factor) {
        saturated = true;
        value = kSaturated;
        return;
    }
    value *= factor;
}

std::string ClassSize::to_string() const {
    if (saturated) return "overflow";
    if (value == 0) return "0";
    std::string digits;
    unsigned __int128 v = value;
    while (v > 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(digits.begin(), digits.end());
    return digits;
}

bool ClassSize::fits_uint64() const {
    return !saturated && value <= std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t ClassSize::as_uint64() const {
    if (!fits_uint64()) return std::numeric_limits<std::uint64_t>::max();
    return static_cast<std::uint64_t>(value);
}

PermutationDataSet encode_canonical(const Presentation& p) {
    ClassEnumerator en(p, true);
    return en.current();
}

ClassSize class_size(const Presentation& p, bool reduced) {
    require_encodable(p);
    ClassSize size;
    for (int k : p.occurrence_counts()) {
        const int top = reduced ? k - 1 : k;
        for (int f = 2; f <= top; ++f) size.multiply(static_cast<std::uint64_t>(f));
    }
    return size;
}

ClassEnumerator::ClassEnumerator(Presentation p, bool reduced)
    : base_(std::move(p)), reduced_(reduced) {
    require_encodable(base_);
    counts_ = base_.occurrence_counts();
    block_start_.assign(counts_.size(), 0);
    int next = 1;
    for (std::size_t g = 0; g < counts_.size(); ++g) {
        block_start_[g] = next;
        next += counts_[g];
    }
    std::vector<int> seen(counts_.size(), 0);
    for (std::size_t ri = 0; ri < base_.relators.size(); ++ri) {
        for (const Letter& l : base_.relators[ri].letters) {
            occurrences_.push_back({l.gen, l.sign, static_cast<int>(ri)});
            const int prior = seen[static_cast<std::size_t>(l.gen - 1)]++;
            const int free_count = counts_[static_cast<std::size_t>(l.gen - 1)] - prior;
            radix_.push_back((reduced_ && prior == 0) ? 1 : free_count);
        }
    }
    digits_.assign(occurrences_.size(), 0);
}

ClassSize ClassEnumerator::size() const {
    ClassSize s;
    for (int r : radix_) s.multiply(static_cast<std::uint64_t>(r));
    return s;
}

PermutationDataSet ClassEnumerator::current() const {
    const int d = base_.total_letters();
    const int m = base_.generator_count;
    const int n = static_cast<int>(base_.relators.size());

    std::vector<std::vector<int>> pool(static_cast<std::size_t>(m));
    for (int g = 0; g < m; ++g) {
        pool[static_cast<std::size_t>(g)].resize(static_cast<std::size_t>(counts_[static_cast<std::size_t>(g)]));
        for (int t = 0; t < counts_[static_cast<std::size_t>(g)]; ++t)
            pool[static_cast<std::size_t>(g)][static_cast<std::size_t>(t)] = block_start_[static_cast<std::size_t>(g)] + t;
    }

    std::vector<std::vector<int>> beta_cycles(static_cast<std::size_t>(n));
    std::vector<int> signs(static_cast<std::size_t>(d), 0);
    for (std::size_t t = 0; t < occurrences_.size(); ++t) {
        const Occurrence& occ = occurrences_[t];
        auto& free_labels = pool[static_cast<std::size_t>(occ.gen - 1)];
        const int label = free_labels[static_cast<std::size_t>(digits_[t])];
        free_labels.erase(free_labels.begin() + digits_[t]);
        beta_cycles[static_cast<std::size_t>(occ.relator)].push_back(label);
        signs[static_cast<std::size_t>(label - 1)] = occ.sign;
    }

    std::vector<std::vector<int>> alpha_cycles(static_cast<std::size_t>(m));
    for (int g = 0; g < m; ++g) {
        for (int t = 0; t < counts_[static_cast<std::size_t>(g)]; ++t)
            alpha_cycles[static_cast<std::size_t>(g)].push_back(block_start_[static_cast<std::size_t>(g)] + t);
    }

    PermutationDataSet ds;
    ds.alpha = CyclePermutation::from_cycles(d, alpha_cycles, false);
    ds.beta = CyclePermutation::from_cycles(d, beta_cycles, false);
    ds.epsilon = IntersectionFunction::from_signs(signs);
    return ds;
}

bool ClassEnumerator::advance() {
    if (done_) return false;
    ++index_;
    for (int t = static_cast<int>(digits_.size()) - 1; t >= 0; --t) {
        if (++digits_[static_cast<std::size_t>(t)] < radix_[static_cast<std::size_t>(t)]) return true;
        digits_[static_cast<std::size_t>(t)] = 0;
    }
    done_ = true;
    return false;
}

void ClassEnumerator::seek(std::uint64_t index) {
    const ClassSize total = size();
    if (!total.saturated && static_cast<unsigned __int128>(index) >= total.value) {
        done_ = true;
        index_ = index;
        std::fill(digits_.begin(), digits_.end(), 0);
        return;
    }
    // Mixed-radix decomposition: the place value of position t is the
    // product of the radixes to its right. Saturated places are larger than
    // any reachable index, so their digit is 0.
    const std::size_t n = radix_.size();
    std::vector<unsigned __int128> place(n, 1);
    std::vector<char> place_sat(n, 0);
    for (std::size_t t = n - 1; t > 0; --t) {
        const unsigned __int128 r = static_cast<unsigned __int128>(radix_[t]);
        if (place_sat[t] || (r > 1 && place[t] > kSaturated / r)) {
            place[t - 1] = kSaturated;
            place_sat[t - 1] = 1;
        } else {
            place[t - 1] = place[t] * r;
            place_sat[t - 1] = place_sat[t];
        }
    }
    unsigned __int128 remaining = index;
    for (std::size_t t = 0; t < n; ++t) {
        if (place_sat[t] || place[t] > remaining) {
            digits_[t] = 0;
            continue;
        }
        digits_[t] = static_cast<int>(remaining / place[t]);
        remaining %= place[t];
    }
    done_ = false;
    index_ = index;
}

std::optional<PermutationDataSet> ClassEnumerator::next() {
    if (done_) return std::nullopt;
    PermutationDataSet ds = current();
    advance();
    return ds;
}

} // namespace heegaard
