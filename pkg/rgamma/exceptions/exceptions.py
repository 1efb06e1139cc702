# This file is part of rgamma-moduli.
# Copyright 2026 rgamma-moduli contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""
Exceptions
"""


class RGammaException(Exception):
    def __init__(self, message):
        self.message = message
        super().__init__(self.message)


class InvalidValueException(RGammaException):
    def __init__(self, attribute, value, rest=""):
        super().__init__(f'The {attribute} value \"{value}\" is invalid {rest}'.strip())


class EmptyInputException(RGammaException):
    def __init__(self, what="generator list"):
        super().__init__(f"The {what} is empty")


class NonCoprimeGeneratorsException(RGammaException):
    def __init__(self, generators, divisor):
        super().__init__(f"The generators {list(generators)} share the common divisor {divisor}, "
                         f"they do not generate a numerical semigroup")


class NotRepresentableException(RGammaException):
    def __init__(self, n, reason):
        super().__init__(f"{n} has no factorization: {reason}")


class UnboundVariableException(RGammaException):
    def __init__(self, variable):
        self.variable = variable
        super().__init__(f"No value has been provided for the variable {variable}")


class UnknownVariableException(RGammaException):
    def __init__(self, variable, known=None):
        self.variable = variable
        rest = f", expected one of {', '.join(known)}" if known else ""
        super().__init__(f"Unknown variable {variable}{rest}")


class ModulusMismatchException(RGammaException):
    def __init__(self, first, second):
        super().__init__(f"Cannot combine series truncated mod t^{first} and mod t^{second}")


class RingMismatchException(RGammaException):
    def __init__(self, first, second):
        super().__init__(f"Cannot combine coefficients of {first} with coefficients of {second}")


class ZeroPolynomialException(RGammaException):
    def __init__(self, operation):
        super().__init__(f"{operation} is undefined for the zero polynomial")


class WrongGeneratorCountException(RGammaException):
    def __init__(self, expected, got):
        super().__init__(f"Expected a semigroup with {expected} minimal generators, got {got}")


class ArityMismatchException(RGammaException):
    def __init__(self, expected, got, what="generators"):
        super().__init__(f"Expected {expected} {what}, got {got}")


class NotNormalFormException(RGammaException):
    def __init__(self, generators):
        super().__init__(f"The generator series ({generators}) are not in normal form "
                         f"for the given semigroup")


class OrderZeroGeneratorException(RGammaException):
    def __init__(self, detail):
        super().__init__(f"The subalgebra closure needs generators of positive order: {detail}")
