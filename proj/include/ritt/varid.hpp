#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ritt {

/// One jet variable a_i: a generator family plus a non-negative jet index.
struct VarId {
    std::uint32_t family = 0;
    std::uint32_t jet = 0;

    friend bool operator==(const VarId&, const VarId&) = default;
    friend auto operator<=>(const VarId& a, const VarId& b) {
        if (auto c = a.family <=> b.family; c != 0) return c;
        return a.jet <=> b.jet;
    }
};

/// A differential polynomial ring k{B}: the declared, totally ordered
/// generator set B. Variables from undeclared families are rejected at
/// construction time.
class Ring {
public:
    Ring() = default;
    explicit Ring(std::vector<std::string> families) : families_(std::move(families)) {
        for (std::size_t i = 0; i < families_.size(); ++i)
            for (std::size_t j = i + 1; j < families_.size(); ++j)
                if (families_[i] == families_[j])
                    throw std::invalid_argument("duplicate generator family: " + families_[i]);
        if (families_.empty()) throw std::invalid_argument("ring needs at least one generator family");
    }

    std::size_t family_count() const { return families_.size(); }
    const std::string& family_name(std::uint32_t f) const { return families_.at(f); }
    const std::vector<std::string>& families() const { return families_; }

    std::uint32_t family_id(const std::string& name) const {
        for (std::size_t i = 0; i < families_.size(); ++i)
            if (families_[i] == name) return static_cast<std::uint32_t>(i);
        throw std::invalid_argument("undeclared generator family: " + name);
    }

    VarId var(const std::string& family, std::uint32_t jet) const {
        return VarId{family_id(family), jet};
    }

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    std::vector<std::string> families_;
};

} // namespace ritt
