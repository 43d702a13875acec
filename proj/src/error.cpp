#include "steencob/error.hpp"

#include <utility>

namespace steencob {

ParseError::ParseError(std::string message, std::size_t offset, std::vector<std::string> expected)
    : Error(std::move(message)), offset_(offset), expected_(std::move(expected))
{
}

}  // namespace steencob
