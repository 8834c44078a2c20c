#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vk {

// Typed error identities surfaced by the library. The CLI maps these to
// domain-error exit status; tests match on the kind.
enum class ErrorKind {
    SyntaxError,
    UnpairedCrossing,
    SignMismatch,
    IllegalSite,
    UnknownId,
    BadComponent,
    SizeError,
    OrientationMismatch,
    IllegalEvent,
    EndpointMismatch,
    CountFailure,
    Disconnected,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg)
        : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

enum class Passage : std::uint8_t { Over, Under };

// One passage of the strand through a classical crossing.
struct Token {
    int id = 0;
    Passage passage = Passage::Over;
    int sign = +1;  // +1 or -1

    friend bool operator==(const Token&, const Token&) = default;
};

using Component = std::vector<Token>;

class LinkCode;

// A knot diagram in a thickened surface, encoded as a single cyclic sequence
// of signed over/under passages. The empty sequence is the unknot. Virtual
// crossings are not represented; the code itself is the object.
class KnotCode {
  public:
    KnotCode() = default;
    explicit KnotCode(Component tokens);

    const Component& tokens() const { return tokens_; }
    std::size_t size() const { return tokens_.size(); }
    int crossing_count() const { return static_cast<int>(tokens_.size() / 2); }
    bool empty() const { return tokens_.empty(); }

    LinkCode as_link() const;

    friend bool operator==(const KnotCode&, const KnotCode&) = default;

  private:
    Component tokens_;
};

// A link diagram: one cyclic token sequence per component. Components may be
// crossing-free (empty sequences); these arise from births in movies.
class LinkCode {
  public:
    LinkCode() : components_(1) {}
    explicit LinkCode(std::vector<Component> components);

    const std::vector<Component>& components() const { return components_; }
    std::size_t component_count() const { return components_.size(); }
    int crossing_count() const;
    std::size_t total_tokens() const;

    bool is_knot() const { return components_.size() == 1; }
    KnotCode as_knot() const;

    friend bool operator==(const LinkCode&, const LinkCode&) = default;

  private:
    std::vector<Component> components_;
};

// Text form: tokens like O3+ / U3-, whitespace separated, components
// separated by '/'. The empty string parses to the unknot.
KnotCode parse_knot(const std::string& text);
LinkCode parse_link(const std::string& text);
std::string serialize(const KnotCode& code);
std::string serialize(const LinkCode& code);
std::string serialize(const Token& t);

// Canonical form: lexicographically minimal over cyclic rotations, component
// reorderings and crossing relabelings (ids become 1..n in first-appearance
// order). Mirror and reverse are not quotiented out.
KnotCode canonicalize(const KnotCode& code);
LinkCode canonicalize(const LinkCode& code);

// Mirror: flip every sign and swap over/under.
KnotCode mirror(const KnotCode& code);
LinkCode mirror(const LinkCode& code);

// Reverse: reverse the traversal direction of every component.
KnotCode reverse(const KnotCode& code);
LinkCode reverse(const LinkCode& code);

// Sum of crossing signs, each crossing counted once.
int writhe(const KnotCode& code);
int writhe(const LinkCode& code);

}  // namespace vk
