#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <variant>

namespace plmorse {

/// Vertex label: an integer or a string token. Integers order before strings.
class Label {
  public:
    Label() : value_(std::int64_t{0}) {}
    Label(std::int64_t v) : value_(v) {}
    Label(int v) : value_(std::int64_t{v}) {}
    Label(std::string s) : value_(std::move(s)) {}
    Label(const char* s) : value_(std::string(s)) {}

    bool is_integer() const { return std::holds_alternative<std::int64_t>(value_); }
    std::int64_t integer() const { return std::get<std::int64_t>(value_); }
    const std::string& text() const { return std::get<std::string>(value_); }

    std::string to_string() const {
        if (is_integer()) return std::to_string(integer());
        return text();
    }

    friend bool operator==(const Label&, const Label&) = default;
    friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
        if (a.is_integer() != b.is_integer())
            return a.is_integer() ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.is_integer()) return a.integer() <=> b.integer();
        return a.text().compare(b.text()) <=> 0;
    }

    friend std::ostream& operator<<(std::ostream& os, const Label& l) { return os << l.to_string(); }

  private:
    std::variant<std::int64_t, std::string> value_;
};

struct LabelHash {
    std::size_t operator()(const Label& l) const {
        if (l.is_integer()) return std::hash<std::int64_t>{}(l.integer());
        return std::hash<std::string>{}(l.text()) ^ 0x9e3779b97f4a7c15ULL;
    }
};

}  // namespace plmorse
