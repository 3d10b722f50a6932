#include "permap/census.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace permap {

namespace {

// Branch points grouped by branching index, ascending.
struct Block {
    Int den = 0;
    Int count = 0;
};

std::vector<Block> group_indices(const std::vector<Int>& indices) {
    std::vector<Block> blocks;
    for (Int d : indices) {
        if (!blocks.empty() && blocks.back().den == d)
            ++blocks.back().count;
        else
            blocks.push_back(Block{d, 1});
    }
    return blocks;
}

// Fill numerators over one signature. Numerators are chosen non-decreasing
// within each block, so every canonical form is produced exactly once. The
// final branch point (largest index, last slot) is solved from the sum
// condition instead of searched.
class NumeratorSearch {
  public:
    NumeratorSearch(Int genus, Int order, const OrbitSignature& sig, std::vector<ClassLabel>& out)
        : genus_(genus), order_(order), sig_(sig), out_(out), blocks_(group_indices(sig.indices)) {}

    void run() {
        if (blocks_.empty()) {
            // Free action: the sum condition is vacuous; a genus-0 quotient
            // with no branch data is never surjective (cannot arise for
            // g >= 2 anyway).
            if (sig_.orbit_genus > 0)
                emit();
            return;
        }
        chosen_.reserve(sig_.indices.size());
        descend(0, 0, 0, 0);
    }

  private:
    void descend(size_t block, Int pos, Int sum, Int theta_gcd) {
        const Block& b = blocks_[block];
        const Int k = order_ / b.den;
        const bool last_slot = block + 1 == blocks_.size() && pos + 1 == b.count;
        const Int lo = pos > 0 ? chosen_.back().num : 1;

        if (last_slot) {
            // m * k == -sum (mod n) determines m modulo den.
            Int target = pos_mod(-sum, order_);
            if (target % k != 0)
                return;
            Int m = target / k;
            if (m == 0 || m < lo || std::gcd(m, b.den) != 1)
                return;
            Int g = std::gcd(theta_gcd, m * k);
            if (sig_.orbit_genus == 0 && std::gcd(g, order_) != 1)
                return;
            chosen_.push_back(Valency{m, b.den});
            emit();
            chosen_.pop_back();
            return;
        }

        const size_t next_block = pos + 1 == b.count ? block + 1 : block;
        const Int next_pos = pos + 1 == b.count ? 0 : pos + 1;
        for (Int m = lo; m < b.den; ++m) {
            if (std::gcd(m, b.den) != 1)
                continue;
            chosen_.push_back(Valency{m, b.den});
            descend(next_block, next_pos, (sum + m * k) % order_, std::gcd(theta_gcd, m * k));
            chosen_.pop_back();
        }
    }

    void emit() {
        // chosen_ is already canonically sorted: blocks ascend by index and
        // numerators ascend within a block.
        out_.push_back(ClassLabel{genus_, TotalValency{order_, chosen_}, sig_.orbit_genus});
    }

    Int genus_;
    Int order_;
    const OrbitSignature& sig_;
    std::vector<ClassLabel>& out_;
    std::vector<Block> blocks_;
    std::vector<Valency> chosen_;
};

void collect_weighted_multisets(const std::vector<Int>& divisors, const std::vector<Int>& weights,
                                size_t from, Int remaining, std::vector<Int>& current,
                                Int orbit_genus, std::vector<OrbitSignature>& out) {
    if (remaining == 0) {
        out.push_back(OrbitSignature{orbit_genus, current});
        return;
    }
    for (size_t i = from; i < divisors.size(); ++i) {
        if (weights[i] > remaining)
            continue;
        current.push_back(divisors[i]);
        collect_weighted_multisets(divisors, weights, i, remaining - weights[i], current, orbit_genus, out);
        current.pop_back();
    }
}

} // namespace

std::vector<OrbitSignature> enumerate_signatures(Int genus, Int order) {
    std::vector<OrbitSignature> out;
    const std::vector<Int> divisors = divisors_from_two(order);
    std::vector<Int> weights;
    weights.reserve(divisors.size());
    for (Int d : divisors)
        weights.push_back(order - order / d); // each >= order/2 > 0

    for (Int gp = 0;; ++gp) {
        Int budget = 2 * genus - 2 - order * (2 * gp - 2);
        if (budget < 0)
            break;
        std::vector<Int> current;
        collect_weighted_multisets(divisors, weights, 0, budget, current, gp, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ClassLabel> enumerate_classes(Int genus, Int order) {
    std::vector<ClassLabel> out;
    for (const OrbitSignature& sig : enumerate_signatures(genus, order))
        NumeratorSearch(genus, order, sig, out).run();
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PowerClass> power_orbits(const std::vector<ClassLabel>& classes) {
    if (classes.empty())
        return {};
    const Int genus = classes.front().genus;
    const Int order = classes.front().tv.order;
    for (const ClassLabel& c : classes)
        if (c.genus != genus || c.tv.order != order)
            throw Error(errc::incompatible_order, "power_orbits needs a single (genus, order) family");

    const std::vector<Int> units = units_mod(order);
    // Key each input class by the minimum of its full power orbit; classes
    // with equal keys are powers of one another.
    std::map<TotalValency, std::vector<TotalValency>> orbits;
    for (const ClassLabel& c : classes) {
        TotalValency key = c.tv;
        for (Int k : units) {
            TotalValency p = power_class(c.tv, k);
            if (p < key)
                key = std::move(p);
        }
        orbits[key].push_back(c.tv);
    }

    std::vector<PowerClass> out;
    out.reserve(orbits.size());
    for (auto& [key, members] : orbits) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        out.push_back(PowerClass{members.front(), std::move(members)});
    }
    std::sort(out.begin(), out.end(), [](const PowerClass& a, const PowerClass& b) {
        return a.representative < b.representative;
    });
    return out;
}

bool are_power_conjugate(const TotalValency& a, const TotalValency& b) {
    if (a.order != b.order)
        return false;
    if (a.order == 1)
        return a == b;
    for (Int k : units_mod(a.order))
        if (power_class(a, k) == b)
            return true;
    return false;
}

Int power_class_index(const CensusRecord& record, const TotalValency& tv) {
    for (size_t i = 0; i < record.power_classes.size(); ++i) {
        const auto& members = record.power_classes[i].members;
        if (std::binary_search(members.begin(), members.end(), tv))
            return static_cast<Int>(i);
    }
    return -1;
}

std::vector<CensusRecord> census(Int genus, Int max_order) {
    if (max_order <= 0)
        max_order = 4 * genus + 2;
    std::vector<CensusRecord> out;
    for (Int n = 2; n <= max_order; ++n) {
        std::vector<ClassLabel> classes = enumerate_classes(genus, n);
        if (classes.empty())
            continue;
        std::vector<PowerClass> orbits = power_orbits(classes);
        out.push_back(CensusRecord{genus, n, std::move(classes), std::move(orbits)});
    }
    return out;
}

std::vector<ClassLabel> oracle_enumerate(Int genus, Int order) {
    constexpr Int kMaxOrder = 60;
    constexpr Int kMaxTuples = Int{1} << 28;
    if (order > kMaxOrder)
        throw Error(errc::instance_too_large, "oracle guard: order > 60");

    // Each branch point consumes at least n - n/p of the degree budget
    // (p = least prime factor of n), which caps the tuple length.
    Int min_weight = order;
    for (Int d : divisors_from_two(order)) {
        min_weight = order - order / d;
        break;
    }
    Int max_budget = 2 * genus - 2 + 2 * order;
    Int max_branches = min_weight > 0 ? max_budget / min_weight : 0;

    Int total = 0, per_b = 1;
    for (Int b = 0; b <= max_branches; ++b) {
        total += per_b;
        if (total > kMaxTuples)
            throw Error(errc::instance_too_large, "oracle guard: too many theta tuples");
        per_b *= order - 1;
    }

    std::set<ClassLabel> found;
    std::vector<Int> thetas;
    for (Int b = 0; b <= max_branches; ++b) {
        thetas.assign(b, 1);
        while (true) {
            auto result = validate(genus, order, thetas);
            if (result.ok())
                found.insert(result.value());
            // Odometer over {1..n-1}^b.
            Int i = b - 1;
            while (i >= 0 && thetas[i] == order - 1)
                thetas[i--] = 1;
            if (i < 0)
                break;
            ++thetas[i];
        }
    }
    return std::vector<ClassLabel>(found.begin(), found.end());
}

} // namespace permap
