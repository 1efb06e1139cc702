import os
from setuptools import setup, find_packages

HERE = os.path.abspath(os.path.dirname(__file__))


# Get the long description from the README file.
with open(os.path.join(HERE, "README.md"), encoding="utf-8") as f:
    long_description = f.read()

setup(
    name="rgamma-moduli",
    author="rgamma-moduli contributors",
    use_scm_version={
        "relative_to": __file__,
        "write_to": "rgamma/version.py",
        "write_to_template": "__version__ = '{version}'\n",
    },
    description="Defining equations of the moduli of complete subalgebras with a given numerical semigroup.",
    long_description=long_description,
    long_description_content_type="text/markdown",
    keywords="numerical semigroup curve singularity moduli computer algebra",
    packages=find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    python_requires=">=3.8",
    include_package_data=True,
    setup_requires=[
        "setuptools_scm",
    ],
    install_requires=[
        "sympy>=1.12"
    ],
    extras_require={
        "dev": [
            "tox==4.13.0",
            "pytest",
            "pytest-cov"
        ],
        "docs": ["sphinx", "sphinx-bluebrain-theme"],
    },
    entry_points={
        "console_scripts": [
            "rgamma = rgamma.cli:main",
        ],
    },
    classifiers=[
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "Programming Language :: Python :: 3 :: Only",
        "Natural Language :: English",
    ]
)
