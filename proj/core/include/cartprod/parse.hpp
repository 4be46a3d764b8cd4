#ifndef CARTPROD_PARSE_HPP
#define CARTPROD_PARSE_HPP

#include <stdexcept>
#include <string>

#include "cartprod/polynomial.hpp"

namespace cartprod {

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Grammar: variables [A-Za-z_][A-Za-z0-9_]*, integer literals, + - * ^ and
/// parentheses. Multiplication is always explicit. Under field qi the token
/// `i` is the imaginary unit, never a variable.
Polynomial parse_polynomial(const std::string& text, const UniversePtr& universe, const Field& field);

} // namespace cartprod

#endif
