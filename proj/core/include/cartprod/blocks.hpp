#ifndef CARTPROD_BLOCKS_HPP
#define CARTPROD_BLOCKS_HPP

#include <string>
#include <vector>

#include "cartprod/monomial.hpp"

namespace cartprod {

/// Ordered partition of the universe into k >= 2 variable blocks, mirroring
/// the product decomposition of the ambient space.
class BlockStructure {
public:
    BlockStructure(UniversePtr uni, std::vector<std::vector<std::size_t>> blocks);

    /// Parses "x,y|z,t" into a universe plus its block partition.
    static BlockStructure parse(const std::string& text);

    const UniversePtr& universe() const { return uni_; }
    std::size_t block_count() const { return blocks_.size(); }
    const std::vector<std::size_t>& block(std::size_t j) const { return blocks_[j]; }
    std::size_t block_size(std::size_t j) const { return blocks_[j].size(); }
    /// Block index owning a variable.
    std::size_t block_of(std::size_t var) const { return owner_[var]; }

    std::string str() const;

private:
    UniversePtr uni_;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::size_t> owner_;
};

} // namespace cartprod

#endif
