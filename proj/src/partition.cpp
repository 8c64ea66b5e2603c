#include "uglov/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace uglov {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
            throw std::invalid_argument("parts must be positive and weakly decreasing");
    }
    rank_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::operator[](int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[static_cast<std::size_t>(i - 1)];
}

int Partition::column_length(int b) const {
    if (b < 1) return 0;
    int len = 0;
    while (len < length() && parts_[static_cast<std::size_t>(len)] >= b) ++len;
    return len;
}

Partition Partition::with_row_delta(int a, int delta) const {
    std::vector<int> parts = parts_;
    if (a > length()) parts.resize(static_cast<std::size_t>(a), 0);
    parts[static_cast<std::size_t>(a - 1)] += delta;
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    // parts bounded above by `cap`, remaining sum `left`
    auto rec = [&](auto&& self, int left, int cap) -> void {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int part = std::min(left, cap); part >= 1; --part) {
            cur.push_back(part);
            self(self, left - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

Bipartition Bipartition::with_row_delta(Component c, int a, int delta) const {
    Bipartition out = *this;
    out.comps_[index_of(c)] = comps_[index_of(c)].with_row_delta(a, delta);
    return out;
}

std::vector<Bipartition> bipartitions_of(int n) {
    std::vector<Bipartition> out;
    for (int k = n; k >= 0; --k) {
        const auto firsts = partitions_of(k);
        const auto seconds = partitions_of(n - k);
        for (const auto& p : firsts)
            for (const auto& q : seconds) out.emplace_back(p, q);
    }
    return out;
}

std::string to_string(const Partition& p) {
    if (p.empty()) return "-";
    std::ostringstream os;
    for (int i = 1; i <= p.length(); ++i) {
        if (i > 1) os << '.';
        os << p[i];
    }
    return os.str();
}

std::string to_string(const Bipartition& bp) { return to_string(bp.first()) + "," + to_string(bp.second()); }

Partition parse_partition(const std::string& text) {
    if (text == "-" || text.empty() || text == "0") return {};
    std::vector<int> parts;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, '.')) {
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad partition '" + text + "'");
        parts.push_back(std::stoi(tok));
    }
    return Partition(std::move(parts));
}

Bipartition parse_bipartition(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw std::invalid_argument("bipartition must look like '6.1,2.2' (got '" + text + "')");
    return {parse_partition(text.substr(0, comma)), parse_partition(text.substr(comma + 1))};
}

}  // namespace uglov
