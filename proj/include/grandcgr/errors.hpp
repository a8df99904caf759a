#ifndef GRANDCGR_ERRORS_HPP
#define GRANDCGR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grandcgr {

// Exit-code contract: 1 usage, 2 data, 3 I/O.
class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace grandcgr

#endif
