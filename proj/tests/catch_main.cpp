// Apache License, Version 2.0, refer to LICENSE.txt

#define CATCH_CONFIG_MAIN
#include <catch2/catch.hpp>
