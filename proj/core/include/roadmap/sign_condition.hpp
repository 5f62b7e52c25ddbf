#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace roadmap {

/// A vector over {-1, 0, +1}, qualifying a list of polynomials.
class SignCondition {
public:
    SignCondition() = default;
    explicit SignCondition(std::vector<int> signs) : s_(std::move(signs)) {
        for (int v : s_)
            if (v < -1 || v > 1) throw std::invalid_argument("SignCondition: entry not in {-1,0,1}");
    }

    size_t size() const { return s_.size(); }
    bool empty() const { return s_.empty(); }
    int operator[](size_t i) const { return s_[i]; }
    const std::vector<int>& signs() const { return s_; }

    void push_back(int v) {
        if (v < -1 || v > 1) throw std::invalid_argument("SignCondition: entry not in {-1,0,1}");
        s_.push_back(v);
    }
    SignCondition prefix(size_t n) const {
        return SignCondition(std::vector<int>(s_.begin(), s_.begin() + static_cast<long>(n)));
    }
    SignCondition suffix_from(size_t n) const {
        return SignCondition(std::vector<int>(s_.begin() + static_cast<long>(n), s_.end()));
    }
    SignCondition concat(const SignCondition& o) const {
        std::vector<int> v = s_;
        v.insert(v.end(), o.s_.begin(), o.s_.end());
        return SignCondition(std::move(v));
    }

    friend bool operator==(const SignCondition& a, const SignCondition& b) { return a.s_ == b.s_; }
    friend bool operator!=(const SignCondition& a, const SignCondition& b) { return !(a == b); }
    friend bool operator<(const SignCondition& a, const SignCondition& b) { return a.s_ < b.s_; }

    std::string to_string() const {
        std::string out = "(";
        for (size_t i = 0; i < s_.size(); ++i) {
            if (i) out += ",";
            out += s_[i] < 0 ? "-" : (s_[i] > 0 ? "+" : "0");
        }
        return out + ")";
    }

private:
    std::vector<int> s_;
};

inline std::string to_string(const SignCondition& s) { return s.to_string(); }

}  // namespace roadmap
