#include "bfc/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bfc {

Partition::Partition(std::vector<int> parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw std::invalid_argument("Partition: negative part");
        if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    parts_ = std::move(parts);
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::padded(int r) const {
    if (length() > r) throw std::invalid_argument("Partition::padded: too many parts");
    std::vector<int> out = parts_;
    out.resize(r, 0);
    return out;
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

Partition Partition::parse(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
        throw std::invalid_argument("Partition::parse: expected [a,b,...], got '" + text + "'");
    }
    s = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                throw std::invalid_argument("Partition::parse: bad part '" + tok + "'");
            }
            parts.push_back(std::stoi(tok));
        }
    }
    return Partition(std::move(parts));
}

bool partition_order(const Partition& a, const Partition& b) {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    return a.parts() > b.parts();
}

namespace {

void fill(int rows, int max_part, int remaining, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (rows == 0) return;
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        cur.push_back(p);
        fill(rows - 1, p, remaining - p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_by_weight(int r, int weight) {
    if (r < 0 || weight < 0) throw std::invalid_argument("enumerate_by_weight: negative argument");
    std::vector<Partition> out;
    std::vector<int> cur;
    fill(r, weight, weight, cur, out);
    return out;
}

std::vector<Partition> enumerate_partitions(const RectBound& bound) {
    if (!bound.width) throw std::invalid_argument("enumerate_partitions: width must be finite");
    std::vector<Partition> out;
    int w = *bound.width;
    for (int k = 0; k <= bound.rows * w; ++k) {
        std::vector<int> cur;
        std::vector<Partition> level;
        fill(bound.rows, w, k, cur, level);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace bfc
