#include "shadowcalc/seq.hpp"

#include <stdexcept>

namespace shadowcalc {

namespace {
const Int kZero = 0;
}

IntSeq::IntSeq(std::vector<Int> entries) : entries_(std::move(entries)) {
    for (const Int& e : entries_)
        if (e < 0) throw std::invalid_argument("IntSeq: negative entry");
    canonicalize();
}

void IntSeq::canonicalize() {
    while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

const Int& IntSeq::at(std::size_t i) const {
    return i < entries_.size() ? entries_[i] : kZero;
}

void IntSeq::set(std::size_t i, Int value) {
    if (value < 0) throw std::invalid_argument("IntSeq: negative entry");
    if (i >= entries_.size()) {
        if (value == 0) return;
        entries_.resize(i + 1, Int(0));
    }
    entries_[i] = std::move(value);
    canonicalize();
}

bool IntSeq::leq(const IntSeq& other) const {
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (entries_[i] > other.at(i)) return false;
    return true;
}

IntSeq IntSeq::plus(const IntSeq& other) const {
    std::vector<Int> out(std::max(size(), other.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = at(i) + other.at(i);
    return IntSeq(std::move(out));
}

IntSeq IntSeq::minus(const IntSeq& other) const {
    if (!other.leq(*this))
        throw std::invalid_argument("IntSeq::minus: subtrahend not componentwise smaller");
    std::vector<Int> out(size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = at(i) - other.at(i);
    return IntSeq(std::move(out));
}

std::string IntSeq::str() const {
    if (entries_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ',';
        out += entries_[i].str();
    }
    return out;
}

IntSeq parse_seq(std::string_view text) {
    std::vector<Int> entries;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : comma - pos);
        // trim spaces
        while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
        while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string_view::npos)
            throw std::invalid_argument("sequence: bad token \"" + std::string(tok) + "\"");
        entries.emplace_back(std::string(tok));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return IntSeq(std::move(entries));
}

}  // namespace shadowcalc
