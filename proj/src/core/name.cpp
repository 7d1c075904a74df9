#include "safsim/core/name.hpp"

#include <algorithm>
#include <functional>

namespace safsim {

static void
validateComponent(std::string_view component)
{
  if (component.empty()) {
    throw Name::Error("name component must not be empty");
  }
  if (component.find('/') != std::string_view::npos) {
    throw Name::Error("name component must not contain '/'");
  }
}

Name::Name(std::vector<std::string> components)
  : m_components(std::move(components))
{
  for (const auto& c : m_components) {
    validateComponent(c);
  }
}

Name
Name::parse(std::string_view uri)
{
  if (uri.empty() || uri.front() != '/') {
    throw Error("name must start with '/': '" + std::string(uri) + "'");
  }
  Name name;
  if (uri.size() == 1) {
    return name;
  }
  std::size_t pos = 1;
  while (true) {
    auto next = uri.find('/', pos);
    auto component = uri.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    if (component.empty()) {
      throw Error("empty name component in '" + std::string(uri) + "'");
    }
    name.m_components.emplace_back(component);
    if (next == std::string_view::npos) {
      break;
    }
    pos = next + 1;
  }
  return name;
}

std::string
Name::toUri() const
{
  if (m_components.empty()) {
    return "/";
  }
  std::string uri;
  for (const auto& c : m_components) {
    uri += '/';
    uri += c;
  }
  return uri;
}

Name
Name::getPrefix(std::size_t n) const
{
  Name prefix;
  n = std::min(n, m_components.size());
  prefix.m_components.assign(m_components.begin(), m_components.begin() + static_cast<std::ptrdiff_t>(n));
  return prefix;
}

bool
Name::isPrefixOf(const Name& other) const noexcept
{
  if (m_components.size() > other.m_components.size()) {
    return false;
  }
  return std::equal(m_components.begin(), m_components.end(), other.m_components.begin());
}

Name
Name::append(std::string component) const
{
  validateComponent(component);
  Name result = *this;
  result.m_components.push_back(std::move(component));
  return result;
}

std::size_t
NameHash::operator()(const Name& name) const noexcept
{
  std::size_t seed = name.size();
  std::hash<std::string> h;
  for (const auto& c : name.components()) {
    seed ^= h(c) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }
  return seed;
}

} // namespace safsim
