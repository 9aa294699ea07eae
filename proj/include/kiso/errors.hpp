#pragma once

#include <stdexcept>
#include <string>

namespace kiso {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph input: bad index, self-loop, duplicate edge, parse failure,
// or a graph that is not a tree where one is required.
class GraphError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its documented domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A generator or recognizer parameter violates a named family clause.
class FamilyError : public Error {
public:
    using Error::Error;
};

// Brute-force search stopped at its size cap without finding a solution.
// Every k-isolating set therefore has at least lower_bound vertices.
class SizeCapExceeded : public Error {
public:
    SizeCapExceeded(int cap)
        : Error("no solution of size <= " + std::to_string(cap)), lower_bound(cap + 1) {}
    int lower_bound;
};

} // namespace kiso
