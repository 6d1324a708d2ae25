#include "mzv/index.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "mzv/errors.hpp"

namespace mzv {

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw InvalidParams("index parts must be >= 1");
    }
}

Index::Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

Index Index::ones(int m) {
    if (m < 0) throw InvalidParams("ones(m): m must be >= 0");
    return Index(std::vector<int>(static_cast<size_t>(m), 1));
}

int Index::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Index Index::tail() const {
    if (parts_.empty()) throw EmptyIndex("tail of empty index");
    return Index(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

bool CanonicalLess::operator()(const Index& a, const Index& b) const {
    int wa = a.weight(), wb = b.weight();
    if (wa != wb) return wa < wb;
    if (a.depth() != b.depth()) return a.depth() < b.depth();
    return a.parts() < b.parts();
}

Index add(const Index& k, const ExponentVector& e) {
    if (static_cast<size_t>(k.depth()) != e.size())
        throw DepthMismatch("add: index depth " + std::to_string(k.depth()) +
                            " != exponent vector length " + std::to_string(e.size()));
    std::vector<int> out = k.parts();
    for (size_t i = 0; i < out.size(); ++i) {
        if (e[i] < 0) throw InvalidParams("exponent vector entries must be >= 0");
        out[i] += e[i];
    }
    return Index(std::move(out));
}

Index zeta_plus(const Index& k) {
    if (k.empty()) throw EmptyIndex("zeta_plus of empty index");
    std::vector<int> out = k.parts();
    out.front() += 1;
    return Index(std::move(out));
}

Index hoffman_dual(const Index& k) {
    if (k.empty()) throw EmptyIndex("hoffman_dual of empty index");
    // Separators between the |k| ones: true = "+" (inside a part).
    std::vector<char> plus;
    plus.reserve(static_cast<size_t>(k.weight()) - 1);
    for (int i = 0; i < k.depth(); ++i) {
        int p = k.parts()[static_cast<size_t>(i)];
        for (int j = 0; j < p - 1; ++j) plus.push_back(1);
        if (i + 1 < k.depth()) plus.push_back(0);
    }
    // Swap "+" and ",", then read the parts back off.
    std::vector<int> out;
    int run = 1;
    for (char sep : plus) {
        if (sep) {  // was "+", now ","
            out.push_back(run);
            run = 1;
        } else {
            ++run;
        }
    }
    out.push_back(run);
    return Index(std::move(out));
}

std::vector<ExponentVector> compositions(int total, int parts, int min_part) {
    std::vector<ExponentVector> out;
    if (total < 0 || parts < 0) return out;
    if (parts == 0) {
        if (total == 0) out.push_back({});
        return out;
    }
    ExponentVector cur(static_cast<size_t>(parts));
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == parts - 1) {
            if (rem >= min_part) {
                cur[static_cast<size_t>(pos)] = rem;
                out.push_back(cur);
            }
            return;
        }
        int leave = min_part * (parts - pos - 1);
        for (int v = min_part; v <= rem - leave; ++v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, rem - v);
        }
    };
    rec(rec, 0, total);
    return out;
}

Index concat(const Index& a, const Index& b) {
    std::vector<int> out = a.parts();
    out.insert(out.end(), b.parts().begin(), b.parts().end());
    return Index(std::move(out));
}

Index with_prefix(int k1, const Index& rest) {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(rest.depth()) + 1);
    out.push_back(k1);
    out.insert(out.end(), rest.parts().begin(), rest.parts().end());
    return Index(std::move(out));
}

Index parse_index(std::string_view text) {
    std::vector<int> parts;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string_view piece =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        // trim spaces
        while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
        while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (ec != std::errc{} || ptr != piece.data() + piece.size())
            throw ParseError("malformed index entry '" + std::string(piece) + "'");
        if (value < 1) throw ParseError("index parts must be >= 1, got " + std::to_string(value));
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Index(std::move(parts));
}

std::string format_index(const Index& k) {
    std::ostringstream os;
    for (int i = 0; i < k.depth(); ++i) {
        if (i) os << ',';
        os << k.parts()[static_cast<size_t>(i)];
    }
    return os.str();
}

}  // namespace mzv
