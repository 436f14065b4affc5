#include "logmonoid/document.hpp"

#include <cctype>

namespace logmonoid {

InputError::InputError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

Value Value::of(const Integer& n) {
    Value v;
    v.type = Type::integer;
    v.integer = n;
    return v;
}

Value Value::of(bool b) {
    Value v;
    v.type = Type::boolean;
    v.boolean = b;
    return v;
}

Value Value::sym(std::string s) {
    Value v;
    v.type = Type::symbol;
    v.symbol = std::move(s);
    return v;
}

Value Value::of(const Vector& vec) {
    std::vector<Value> items;
    for (const auto& x : vec) items.push_back(of(x));
    return list_of(std::move(items));
}

Value Value::of(const std::vector<Vector>& vs) {
    std::vector<Value> items;
    for (const auto& x : vs) items.push_back(of(x));
    return list_of(std::move(items));
}

Value Value::list_of(std::vector<Value> items) {
    Value v;
    v.type = Type::list;
    v.list = std::move(items);
    return v;
}

Value& Value::set(std::string key, Value v) {
    for (auto& [k, old] : map)
        if (k == key) {
            old = std::move(v);
            return *this;
        }
    map.emplace_back(std::move(key), std::move(v));
    return *this;
}

const Value* Value::find(const std::string& key) const {
    if (type != Type::map) return nullptr;
    for (const auto& [k, v] : map)
        if (k == key) return &v;
    return nullptr;
}

const Value& Value::at(const std::string& key) const {
    if (type != Type::map) fail("expected a map");
    const Value* v = find(key);
    if (!v) fail("missing key '" + key + "'");
    return *v;
}

void Value::fail(const std::string& msg) const { throw InputError(line, column, msg); }

const Integer& Value::as_integer() const {
    if (type != Type::integer) fail("expected an integer");
    return integer;
}

const std::string& Value::as_symbol() const {
    if (type != Type::symbol) fail("expected a symbol");
    return symbol;
}

bool Value::as_bool() const {
    if (type != Type::boolean) fail("expected true or false");
    return boolean;
}

const std::vector<Value>& Value::as_list() const {
    if (type != Type::list) fail("expected a list");
    return list;
}

Vector Value::as_vector() const {
    Vector out;
    for (const auto& x : as_list()) out.push_back(x.as_integer());
    return out;
}

std::vector<Vector> Value::as_vectors() const {
    std::vector<Vector> out;
    for (const auto& x : as_list()) out.push_back(x.as_vector());
    return out;
}

std::size_t Value::as_count() const {
    const Integer& n = as_integer();
    if (sgn(n) < 0 || !n.fits_ulong_p() || n > 100000) fail("expected a small nonnegative count");
    return n.get_ui();
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Value document() {
        skip();
        Value doc;
        mark(doc);
        if (peek() == '{') {
            doc = map();
            skip();
            if (!eof()) error("unexpected text after the document");
            return doc;
        }
        while (!eof()) {
            entry(doc);
            skip();
            if (peek() == ',') {
                advance();
                skip();
            }
        }
        return doc;
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return eof() ? '\0' : s_[pos_]; }

    void advance() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    [[noreturn]] void error(const std::string& msg) const { throw InputError(line_, col_, msg); }

    void mark(Value& v) const {
        v.line = line_;
        v.column = col_;
    }

    void expect(char c) {
        skip();
        if (peek() != c) error(std::string("expected '") + c + "'");
        advance();
    }

    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
    }

    std::string identifier() {
        if (!ident_start(peek())) error("expected a name");
        std::string out;
        while (!eof() && ident_char(peek())) {
            out += peek();
            advance();
        }
        return out;
    }

    void entry(Value& m) {
        skip();
        std::size_t line = line_, col = col_;
        std::string key = identifier();
        if (m.find(key)) throw InputError(line, col, "duplicate key '" + key + "'");
        expect(':');
        skip();
        m.map.emplace_back(std::move(key), value());
    }

    Value map() {
        Value m;
        mark(m);
        expect('{');
        skip();
        if (peek() == '}') {
            advance();
            return m;
        }
        for (;;) {
            entry(m);
            skip();
            if (peek() == ',') {
                advance();
                skip();
                if (peek() == '}') {
                    advance();
                    return m;
                }
                continue;
            }
            if (peek() == '}') {
                advance();
                return m;
            }
            if (ident_start(peek())) continue;
            error("expected ',' or '}'");
        }
    }

    Value list() {
        Value l;
        l.type = Value::Type::list;
        mark(l);
        expect('[');
        skip();
        if (peek() == ']') {
            advance();
            return l;
        }
        for (;;) {
            skip();
            l.list.push_back(value());
            skip();
            if (peek() == ',') {
                advance();
                skip();
                if (peek() == ']') {
                    advance();
                    return l;
                }
                continue;
            }
            if (peek() == ']') {
                advance();
                return l;
            }
            error("expected ',' or ']'");
        }
    }

    Value value() {
        skip();
        if (eof()) error("unexpected end of input");
        char c = peek();
        if (c == '{') return map();
        if (c == '[') return list();
        Value v;
        mark(v);
        if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            if (c == '-' || c == '+') {
                if (c == '-') digits += c;
                advance();
            }
            if (!std::isdigit(static_cast<unsigned char>(peek()))) error("expected digits");
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
                digits += peek();
                advance();
            }
            if (ident_char(peek())) error("malformed integer");
            v.type = Value::Type::integer;
            v.integer = Integer(digits, 10);
            return v;
        }
        if (ident_start(c)) {
            std::string word = identifier();
            if (word == "true" || word == "false") {
                v.type = Value::Type::boolean;
                v.boolean = word == "true";
            } else {
                v.type = Value::Type::symbol;
                v.symbol = std::move(word);
            }
            return v;
        }
        error(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

}  // namespace

Value parse_document(const std::string& text) { return Parser(text).document(); }

std::string emit_value(const Value& v) {
    switch (v.type) {
        case Value::Type::integer: return v.integer.get_str();
        case Value::Type::symbol: return v.symbol;
        case Value::Type::boolean: return v.boolean ? "true" : "false";
        case Value::Type::list: {
            std::string out = "[";
            for (std::size_t i = 0; i < v.list.size(); ++i) {
                if (i) out += ",";
                out += emit_value(v.list[i]);
            }
            return out + "]";
        }
        case Value::Type::map: {
            std::string out = "{";
            for (std::size_t i = 0; i < v.map.size(); ++i) {
                if (i) out += ", ";
                out += v.map[i].first + ": " + emit_value(v.map[i].second);
            }
            return out + "}";
        }
    }
    return {};
}

std::string emit_document(const Value& doc) {
    std::string out;
    for (const auto& [k, v] : doc.map) out += k + ": " + emit_value(v) + "\n";
    return out;
}

}  // namespace logmonoid
