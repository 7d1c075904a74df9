#ifndef SAFSIM_CORE_NAME_HPP
#define SAFSIM_CORE_NAME_HPP

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace safsim {

/** \brief A hierarchical NDN name, e.g. /server3/obj17/chunk5.
 *
 *  The root name "/" has no components and only appears as a FIB prefix.
 *  Every component is non-empty and contains no '/'.
 */
class Name
{
public:
  class Error : public std::invalid_argument
  {
  public:
    using std::invalid_argument::invalid_argument;
  };

  Name() = default;

  explicit
  Name(std::vector<std::string> components);

  /** \brief parses the canonical text form
   *  \throw Error on empty components or a missing leading slash
   */
  static Name
  parse(std::string_view uri);

  std::string
  toUri() const;

  std::size_t
  size() const noexcept
  {
    return m_components.size();
  }

  bool
  empty() const noexcept
  {
    return m_components.empty();
  }

  const std::string&
  at(std::size_t i) const
  {
    return m_components.at(i);
  }

  const std::vector<std::string>&
  components() const noexcept
  {
    return m_components;
  }

  /// The first \p n components (clamped to size()).
  Name
  getPrefix(std::size_t n) const;

  bool
  isPrefixOf(const Name& other) const noexcept;

  Name
  append(std::string component) const;

  friend auto operator<=>(const Name&, const Name&) = default;
  friend bool operator==(const Name&, const Name&) = default;

private:
  std::vector<std::string> m_components;
};

struct NameHash
{
  std::size_t
  operator()(const Name& name) const noexcept;
};

} // namespace safsim

#endif // SAFSIM_CORE_NAME_HPP
