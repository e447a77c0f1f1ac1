#include "eca/errors.hpp"

#include <iostream>

namespace eca {

const WarningHandler& stderr_warnings() {
  static const WarningHandler handler = [](const std::string& msg) {
    std::cerr << "warning: " << msg << '\n';
  };
  return handler;
}

const WarningHandler& ignore_warnings() {
  static const WarningHandler handler = [](const std::string&) {};
  return handler;
}

}  // namespace eca
