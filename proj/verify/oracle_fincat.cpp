#include "oracles.hpp"

namespace germcat::oracle {

std::pair<std::size_t, std::size_t> floyd(const FinMap& step, std::size_t start) {
  std::size_t tortoise = step(start);
  std::size_t hare = step(step(start));
  while (tortoise != hare) {
    tortoise = step(tortoise);
    hare = step(step(hare));
  }
  std::size_t mu = 0;
  tortoise = start;
  while (tortoise != hare) {
    tortoise = step(tortoise);
    hare = step(hare);
    ++mu;
  }
  std::size_t lambda = 1;
  hare = step(tortoise);
  while (tortoise != hare) {
    hare = step(hare);
    ++lambda;
  }
  return {mu, lambda};
}

}  // namespace germcat::oracle
