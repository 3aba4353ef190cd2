#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "vlab/experiment.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        const vlab::ExperimentConfig cfg = vlab::parse_args(args);
        return vlab::run(cfg);
    } catch (const vlab::help_requested& e) {
        std::cout << e.what() << "\n";
        return vlab::kExitOk;
    } catch (const vlab::usage_error& e) {
        std::cerr << e.what() << "\n";
        return vlab::kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return vlab::kExitUsage;
    }
}
