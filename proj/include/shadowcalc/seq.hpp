#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "shadowcalc/int.hpp"

namespace shadowcalc {

// Ultimately vanishing sequence of naturals, index origin 0. The stored
// form is canonical: no trailing zeros, so the zero sequence is empty.
class IntSeq {
  public:
    IntSeq() = default;
    explicit IntSeq(std::vector<Int> entries);

    static IntSeq zero() { return IntSeq(); }

    // Entry at i, 0 beyond the stored length.
    const Int& at(std::size_t i) const;
    std::size_t size() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }
    const std::vector<Int>& entries() const { return entries_; }

    void set(std::size_t i, Int value);

    bool operator==(const IntSeq&) const = default;

    // Componentwise partial order.
    bool leq(const IntSeq& other) const;

    IntSeq plus(const IntSeq& other) const;
    // Throws std::invalid_argument when other is not componentwise <= *this.
    IntSeq minus(const IntSeq& other) const;

    // "a,b,c"; the zero sequence renders as "0".
    std::string str() const;

  private:
    void canonicalize();
    std::vector<Int> entries_;
};

// Parses "3,3" (optionally with spaces around entries; trailing zeros are
// canonicalized away). Throws std::invalid_argument naming the offending
// token.
IntSeq parse_seq(std::string_view text);

}  // namespace shadowcalc
