import setuptools


with open("README.md", "r") as f:
    long_description = f.read()

setuptools.setup(
    name="algebra-workbench",
    description="Finite algebra workbench for deduction theorems, inconsistency lemmas and semisimplicity",
    author="Algebra Workbench Developers",
    version="0.0.1",
    long_description=long_description,
    long_description_content_type="text/markdown",
    license="MIT",
    install_requires=[],
    extras_require={
        "test": [
            "pytest>=8.3,<9",
            "hypothesis>=6.112,<7",
        ],
    },
    packages=setuptools.find_packages(
        include=(
            "algebra_workbench",
            "algebra_workbench.*",
        )
    ),
    entry_points={
        "console_scripts": ["alg = algebra_workbench.cli:main"],
    },
    python_requires=">=3.12",
    package_data={"algebra_workbench": ["py.typed"]},
    include_package_data=True
)
