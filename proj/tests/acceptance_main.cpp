#include <iostream>

#include "matschur/selftest.hpp"

int main() { return matschur::selftest::print_acceptance(std::cout) ? 0 : 1; }
