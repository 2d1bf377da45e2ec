#pragma once

#include <stdexcept>
#include <string>

namespace ndl {

// Base class for all library-defined failures.  Caller-contract violations
// (bad indices, negative sizes) use std::invalid_argument instead.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input: graph6, edge lists, JSON documents, deck files.
class parse_error : public error {
public:
    explicit parse_error(const std::string& what) : error(what) {}
};

// Request exceeds a hard enumeration cap.
class cap_error : public error {
public:
    explicit cap_error(const std::string& what) : error(what) {}
};

// Two graphs that were required to share an invariant do not.
class mismatch_error : public error {
public:
    explicit mismatch_error(const std::string& what) : error(what) {}
};

// A vertex-deleted deck is internally inconsistent.
class deck_error : public error {
public:
    explicit deck_error(const std::string& what) : error(what) {}
};

} // namespace ndl
