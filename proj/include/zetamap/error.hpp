#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zetamap {

/// Error for malformed text encodings. Positions are 1-based character
/// indices into the offending input.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace zetamap
