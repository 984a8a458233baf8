#include "kschur/core.hpp"

#include <algorithm>
#include <stdexcept>

namespace kschur {

bool is_core(const Partition& lambda, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j)
            if (hook_length(lambda, {i, j}) == k + 1) return false;
    return true;
}

Core as_core(Partition shape, int k) {
    if (!is_core(shape, k))
        throw std::invalid_argument("not a (k+1)-core");
    return Core{std::move(shape), k};
}

Partition core_to_bounded(const Core& gamma) {
    std::vector<int> parts;
    for (int i = 1; i <= gamma.shape.length(); ++i) {
        int count = 0;
        for (int j = 1; j <= gamma.shape.part(i); ++j)
            if (hook_length(gamma.shape, {i, j}) <= gamma.k) ++count;
        parts.push_back(count);
    }
    return Partition(std::move(parts));
}

CoreConstruction bounded_to_core(const Partition& lambda, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (!lambda.empty() && lambda.parts()[0] > k)
        throw std::invalid_argument("not k-bounded");

    int len = lambda.length();
    std::vector<int> shifts(len, 0);
    std::vector<int> rowlen(len + 1, 0);  // rowlen[i] = full length of row i once placed

    // Rows are placed top (i = len) to bottom; hooks of already placed rows
    // never change when a row is added below them.
    for (int i = len; i >= 1; --i) {
        int li = lambda.part(i);
        int t = 0;
        for (;; ++t) {
            bool ok = true;
            for (int c = t + 1; c <= t + li && ok; ++c) {
                int arm = t + li - c;
                int leg = 0;
                for (int r = i + 1; r <= len; ++r)
                    if (rowlen[r] >= c) ++leg;
                if (arm + leg + 1 > k) ok = false;
            }
            if (ok) break;
        }
        shifts[i - 1] = t;
        rowlen[i] = t + li;
        if (i < len && shifts[i - 1] < shifts[i])
            throw std::logic_error("core construction produced non-monotone shifts");
    }

    std::vector<int> gamma_parts(rowlen.begin() + 1, rowlen.begin() + 1 + len);
    Core gamma = as_core(Partition(gamma_parts), k);
    std::vector<int> rho(shifts);
    return CoreConstruction{std::move(gamma), std::move(shifts), sort_to_partition(rho)};
}

Core apply_generator(const Core& gamma, int i, GeneratorMode mode) {
    if (i < 0 || i > gamma.k)
        throw std::invalid_argument("residue out of range");
    CornerData cd = corners(gamma.shape);
    std::vector<int> parts(gamma.shape.parts());
    if (mode == GeneratorMode::remove) {
        for (Cell c : cd.removable)
            if (residue(c, gamma.k) == i) --parts[c.row - 1];
    } else {
        for (Cell c : cd.addable) {
            if (residue(c, gamma.k) != i) continue;
            if (c.row - 1 < static_cast<int>(parts.size()))
                ++parts[c.row - 1];
            else
                parts.push_back(1);
        }
    }
    return as_core(Partition(std::move(parts)), gamma.k);
}

std::vector<std::set<int>> row_residue_sets(const CoreConstruction& cc) {
    const Partition& gamma = cc.core.shape;
    std::vector<std::set<int>> out;
    for (int i = 1; i <= gamma.length(); ++i) {
        std::set<int> res;
        for (int j = gamma.part(i + 1) + 1; j <= gamma.part(i); ++j)
            res.insert(residue({i, j}, cc.core.k));
        out.push_back(std::move(res));
    }
    return out;
}

}  // namespace kschur
