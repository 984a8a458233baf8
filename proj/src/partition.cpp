#include "kschur/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace kschur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("partition parts must be positive");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ']';
    return out;
}

Partition Partition::parse(std::string_view text) {
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("partition parse error at position " +
                                    std::to_string(pos) + ": " + what);
    };
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '[') fail("expected '['");
    ++pos;
    std::vector<int> parts;
    skip_ws();
    if (pos < text.size() && text[pos] == ']') {
        ++pos;
    } else {
        while (true) {
            skip_ws();
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                fail("expected digit");
            int value = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                value = value * 10 + (text[pos] - '0');
                ++pos;
            }
            parts.push_back(value);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ']') {
                ++pos;
                break;
            }
            fail("expected ',' or ']'");
        }
    }
    skip_ws();
    if (pos != text.size()) fail("trailing characters");
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols;
    if (!lambda.empty()) {
        cols.resize(lambda.parts()[0], 0);
        for (int p : lambda.parts())
            for (int j = 0; j < p; ++j) ++cols[j];
    }
    return Partition(std::move(cols));
}

std::optional<int> dominance_violation(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size())
        throw std::invalid_argument("incomparable sizes");
    long long pm = 0, pl = 0;
    int len = std::max(mu.length(), lambda.length());
    for (int i = 1; i <= len; ++i) {
        pm += mu.part(i);
        pl += lambda.part(i);
        if (pm > pl) return i;
    }
    return std::nullopt;
}

bool dominates(const Partition& mu, const Partition& lambda) {
    return !dominance_violation(mu, lambda).has_value();
}

int hook_length(const Partition& lambda, Cell c) {
    if (!lambda.contains(c))
        throw std::invalid_argument("cell outside partition");
    int arm = lambda.part(c.row) - c.col;
    int leg = 0;
    for (int r = c.row + 1; lambda.part(r) >= c.col; ++r) ++leg;
    return arm + leg + 1;
}

int residue(Cell c, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    int m = (c.col - c.row) % (k + 1);
    return m < 0 ? m + k + 1 : m;
}

int h_between(const Partition& lambda, Cell a, Cell b) {
    if (!lambda.contains(a) || !lambda.contains(b))
        throw std::invalid_argument("cell outside partition");
    if (b.row > a.row || b.col < a.col)
        throw std::invalid_argument("second cell must lie weakly southeast of the first");
    int count = 0;
    for (int x = b.row; x <= a.row; ++x)
        if (lambda.contains({x, a.col})) ++count;
    for (int y = a.col + 1; y <= b.col; ++y)
        if (lambda.contains({b.row, y})) ++count;
    return count;
}

CornerData corners(const Partition& lambda) {
    CornerData out;
    int len = lambda.length();
    for (int i = 1; i <= len; ++i) {
        int li = lambda.part(i), above = lambda.part(i + 1);
        for (int j = above + 1; j <= li; ++j) out.top_cells.push_back({i, j});
        if (li > above) out.removable.push_back({i, li});
        // addable corner at the end of row i needs support from the row below
        if (li < lambda.part(i - 1) || i == 1) out.addable.push_back({i, li + 1});
    }
    out.addable.push_back({len + 1, 1});
    return out;
}

Partition sort_to_partition(const Composition& alpha) {
    std::vector<int> parts;
    for (int a : alpha) {
        if (a < 0) throw std::invalid_argument("composition parts must be nonnegative");
        if (a > 0) parts.push_back(a);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

namespace {

void gen_partitions(int remaining, int maxpart, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(remaining, maxpart); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw std::invalid_argument("negative size");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(d, d == 0 ? 1 : d, acc, out);
    return out;
}

std::vector<Partition> k_bounded_partitions(int d, int k) {
    if (d < 0 || k < 1) throw std::invalid_argument("bad arguments");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(d, std::min(d == 0 ? 1 : d, k), acc, out);
    return out;
}

}  // namespace kschur
