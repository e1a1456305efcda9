#include "riemwave/errors.hpp"

#include <sstream>

namespace riemwave {

namespace {

std::string evaluation_message(double t, double x, const std::string& what) {
  std::ostringstream os;
  os.precision(17);
  os << what << " at (t=" << t << ", x=" << x << ")";
  return os.str();
}

std::string blowup_message(std::size_t step, const std::string& quantity, std::size_t cell) {
  std::ostringstream os;
  os << "non-finite " << quantity << " at step " << step << ", cell " << cell;
  return os.str();
}

std::string config_message(const std::string& key, std::size_t line, const std::string& what) {
  std::ostringstream os;
  if (line > 0) {
    os << "line " << line << ": ";
  }
  os << "key '" << key << "': " << what;
  return os.str();
}

}  // namespace

EvaluationError::EvaluationError(double t, double x, const std::string& what)
    : std::runtime_error(evaluation_message(t, x, what)), t_(t), x_(x) {}

BlowupError::BlowupError(std::size_t step, std::string quantity, std::size_t cell)
    : std::runtime_error(blowup_message(step, quantity, cell)),
      step_(step),
      quantity_(std::move(quantity)),
      cell_(cell) {}

ConfigError::ConfigError(std::string key, std::size_t line, const std::string& what)
    : std::runtime_error(config_message(key, line, what)), key_(std::move(key)), line_(line) {}

}  // namespace riemwave
