#include <symtutte/families.hpp>
#include <symtutte/subset_engine.hpp>
#include <iostream>
int main() {
    auto a = symtutte::family_by_name("catalan").build(3);
    std::cout << symtutte::tutte_by_definition(a).to_string() << "\n";
}
