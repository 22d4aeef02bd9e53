#include "rabin/random.hpp"

#include <random>

namespace rabin {

unsigned long entropy_seed() {
  std::random_device rd;
  return (static_cast<unsigned long>(rd()) << 32) ^
         static_cast<unsigned long>(rd());
}

}  // namespace rabin
