#include <iostream>

#include "cobox/acceptance.hpp"

int main() { return cobox::print_acceptance(cobox::run_acceptance(), std::cout) ? 0 : 1; }
