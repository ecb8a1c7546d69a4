#ifndef TMLAB_ERRORS_HPP
#define TMLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tmlab {

/// Malformed input: bad graph/inequality/point text, out-of-range element,
/// violated precondition on arguments.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An exhaustive computation was refused because the instance exceeds a
/// configured size cap.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, int size, int cap)
        : std::runtime_error(what + ": size " + std::to_string(size) +
                             " exceeds cap " + std::to_string(cap)),
          size_(size), cap_(cap) {}

    int size() const noexcept { return size_; }
    int cap() const noexcept { return cap_; }

private:
    int size_;
    int cap_;
};

/// H-representation whose polyhedron is not bounded.
class Unbounded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace tmlab

#endif
