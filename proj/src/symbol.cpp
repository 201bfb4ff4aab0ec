#include "monoreg/symbol.hpp"

#include <algorithm>
#include <cctype>

namespace monoreg {

bool is_valid_neuron_id(const NeuronId& id) {
    if (id.empty())
        return false;
    return std::none_of(id.begin(), id.end(), [](unsigned char c) {
        return std::isspace(c) != 0;
    });
}

Symbol::Symbol(std::initializer_list<NeuronId> members)
    : Symbol(std::vector<NeuronId>(members)) {}

Symbol::Symbol(std::vector<NeuronId> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Symbol::contains(const NeuronId& id) const {
    return std::binary_search(members_.begin(), members_.end(), id);
}

bool Symbol::subset_of(const Symbol& other) const {
    return std::includes(other.members_.begin(), other.members_.end(),
                         members_.begin(), members_.end());
}

InputString prefix(const InputString& alpha, std::size_t len) {
    if (len > alpha.size())
        throw InputDomainError("prefix length exceeds string length");
    return InputString(alpha.begin(), alpha.begin() + static_cast<std::ptrdiff_t>(len));
}

bool embeds(const InputString& alpha, const InputString& beta) {
    if (beta.size() > alpha.size())
        return false;
    const std::size_t offset = alpha.size() - beta.size();
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (!beta[i].subset_of(alpha[offset + i]))
            return false;
    }
    return true;
}

std::vector<Symbol> powerset(const std::set<NeuronId>& ids) {
    const std::vector<NeuronId> pool(ids.begin(), ids.end());
    if (pool.size() >= 24)
        throw SizeError("powerset of " + std::to_string(pool.size()) + " inputs is too large");
    std::vector<Symbol> result;
    result.reserve(std::size_t{1} << pool.size());
    for (std::size_t bits = 0; bits < (std::size_t{1} << pool.size()); ++bits) {
        std::vector<NeuronId> members;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (bits & (std::size_t{1} << i))
                members.push_back(pool[i]);
        }
        result.emplace_back(std::move(members));
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::string symbol_str(const Symbol& sym) {
    std::string out = "{";
    for (std::size_t i = 0; i < sym.members().size(); ++i) {
        if (i > 0)
            out += ",";
        out += sym.members()[i];
    }
    out += "}";
    return out;
}

std::string string_str(const InputString& alpha) {
    std::string out;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i > 0)
            out += ";";
        out += "[";
        for (std::size_t j = 0; j < alpha[i].members().size(); ++j) {
            if (j > 0)
                out += ",";
            out += alpha[i].members()[j];
        }
        out += "]";
    }
    return out;
}

} // namespace monoreg
