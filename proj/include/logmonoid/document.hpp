#pragma once

#include "logmonoid/integer.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace logmonoid {

/// Malformed input document; carries the 1-based position of the offending token.
class InputError : public std::runtime_error {
public:
    InputError(std::size_t line, std::size_t column, const std::string& what);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

/// Node of the flow-style text format:
///   document := entry* | map
///   entry    := key ':' value
///   value    := integer | symbol | true | false | '[' values ']' | '{' entries '}'
/// Entries and list items are separated by commas or newlines; '#' starts a comment.
struct Value {
    enum class Type { integer, symbol, boolean, list, map };

    Type type = Type::map;
    Integer integer;
    std::string symbol;
    bool boolean = false;
    std::vector<Value> list;
    std::vector<std::pair<std::string, Value>> map;
    std::size_t line = 0, column = 0;

    static Value of(const Integer& n);
    static Value of(long n) { return of(Integer(n)); }
    static Value of(std::size_t n) { return of(Integer(static_cast<unsigned long>(n))); }
    static Value of(bool b);
    static Value sym(std::string s);
    static Value of(const Vector& v);
    static Value of(const std::vector<Vector>& vs);
    static Value list_of(std::vector<Value> items);
    static Value empty_map() { return Value{}; }

    Value& set(std::string key, Value v);
    const Value* find(const std::string& key) const;
    /// Throws InputError naming the missing key.
    const Value& at(const std::string& key) const;

    const Integer& as_integer() const;
    const std::string& as_symbol() const;
    bool as_bool() const;
    const std::vector<Value>& as_list() const;
    Vector as_vector() const;
    std::vector<Vector> as_vectors() const;
    std::size_t as_count() const;

    [[noreturn]] void fail(const std::string& msg) const;
};

Value parse_document(const std::string& text);

/// Canonical text: top-level entries one per line, nested values in flow style.
std::string emit_document(const Value& doc);
std::string emit_value(const Value& v);

}  // namespace logmonoid
