#ifndef MONOREG_SYMBOL_HPP
#define MONOREG_SYMBOL_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "monoreg/errors.hpp"

namespace monoreg {

// Neurons are opaque string tokens: nonempty, no whitespace.
using NeuronId = std::string;

bool is_valid_neuron_id(const NeuronId& id);

// A symbol is a finite set of input neurons, kept sorted and duplicate-free.
// Symbols compare lexicographically on their sorted member lists, which is
// the canonical order used for enumeration and serialization.
class Symbol {
public:
    Symbol() = default;
    Symbol(std::initializer_list<NeuronId> members);
    explicit Symbol(std::vector<NeuronId> members);

    const std::vector<NeuronId>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool contains(const NeuronId& id) const;
    bool subset_of(const Symbol& other) const;

    auto operator<=>(const Symbol&) const = default;

private:
    std::vector<NeuronId> members_;
};

// An input string: finite nonempty sequence of symbols (the empty sequence
// is representable; operations that require nonemptiness check for it).
using InputString = std::vector<Symbol>;

// First `len` symbols of alpha; len must not exceed alpha's length.
InputString prefix(const InputString& alpha, std::size_t len);

// True iff beta sits at the end of alpha: |beta| <= |alpha| and each symbol
// of beta is a subset of the symbol at the corresponding tail position.
bool embeds(const InputString& alpha, const InputString& beta);

// All subsets of the given ids, in canonical symbol order.
std::vector<Symbol> powerset(const std::set<NeuronId>& ids);

// Display forms: "{a,b}" and "[a,b];[];[c]".
std::string symbol_str(const Symbol& sym);
std::string string_str(const InputString& alpha);

} // namespace monoreg

#endif
