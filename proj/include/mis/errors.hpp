#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace mis {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // kept sorted ascending, no duplicates

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// g[source] is not connected (or source is empty).
class DisconnectedSourceError : public Error {
public:
    explicit DisconnectedSourceError(const std::string& what) : Error(what) {}
};

// An enumeration or oracle exceeded its configured size/count cap.
class CapExceededError : public Error {
public:
    CapExceededError(const std::string& what, long long cap, long long reached)
        : Error(what), cap(cap), reached(reached) {}
    long long cap;
    long long reached;
};

class NotBipartiteError : public Error {
public:
    NotBipartiteError(const std::string& what, VertexSet odd_cycle)
        : Error(what), odd_cycle(std::move(odd_cycle)) {}
    VertexSet odd_cycle;  // vertices of an odd cycle, in cyclic order
};

class NotChordalError : public Error {
public:
    NotChordalError(const std::string& what, VertexSet hole)
        : Error(what), hole(std::move(hole)) {}
    VertexSet hole;  // vertices of a hole, in cyclic order
};

class NotSeparableError : public Error {
public:
    explicit NotSeparableError(const std::string& what) : Error(what) {}
};

// A proof-backed structural assertion failed: the input cannot belong to the
// graph class the solver assumes. Carries a concrete witness when available.
class ClassViolationError : public Error {
public:
    ClassViolationError(const std::string& check, const std::string& what, VertexSet witness = {})
        : Error(what), check(check), witness(std::move(witness)) {}
    std::string check;
    VertexSet witness;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, long line) : Error(what), line(line) {}
    long line;
};

}  // namespace mis
