#include "cartprod/blocks.hpp"

#include <sstream>
#include <stdexcept>

namespace cartprod {

BlockStructure::BlockStructure(UniversePtr uni, std::vector<std::vector<std::size_t>> blocks)
    : uni_(std::move(uni)), blocks_(std::move(blocks)) {
    if (blocks_.size() < 2) throw std::invalid_argument("block structure needs at least 2 blocks");
    owner_.assign(uni_->size(), static_cast<std::size_t>(-1));
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
        if (blocks_[j].empty()) throw std::invalid_argument("empty block");
        for (auto v : blocks_[j]) {
            if (v >= uni_->size()) throw std::out_of_range("block variable index");
            if (owner_[v] != static_cast<std::size_t>(-1))
                throw std::invalid_argument("variable in two blocks");
            owner_[v] = j;
        }
    }
    for (std::size_t v = 0; v < uni_->size(); ++v)
        if (owner_[v] == static_cast<std::size_t>(-1))
            throw std::invalid_argument("blocks must partition the universe");
}

BlockStructure BlockStructure::parse(const std::string& text) {
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t> current;
    std::string token;
    auto flush_token = [&]() {
        if (token.empty()) throw std::invalid_argument("empty variable name in block spec");
        current.push_back(names.size());
        names.push_back(token);
        token.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush_token();
        } else if (c == '|') {
            flush_token();
            blocks.push_back(current);
            current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            token += c;
        }
    }
    flush_token();
    blocks.push_back(current);
    return BlockStructure(Universe::make(std::move(names)), std::move(blocks));
}

std::string BlockStructure::str() const {
    std::ostringstream os;
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
        if (j) os << "|";
        for (std::size_t k = 0; k < blocks_[j].size(); ++k) {
            if (k) os << ",";
            os << uni_->name(blocks_[j][k]);
        }
    }
    return os.str();
}

} // namespace cartprod
