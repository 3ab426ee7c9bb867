// httplib_config.hpp
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Every translation unit must include cpp-httplib through this header:
// mixing TLS and non-TLS configurations of the same header is an ODR
// violation that crashes at runtime.

#ifndef MCQLINT_HTTPLIB_CONFIG_HPP
#define MCQLINT_HTTPLIB_CONFIG_HPP

#ifdef MCQLINT_WITH_TLS
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif

#include <httplib.h>

#endif  // MCQLINT_HTTPLIB_CONFIG_HPP
