from setuptools import setup, find_packages

setup(
    name="finite_tqft",
    version="0.1.0",
    description="Finite-group topological quantum field theory: state sums, Frobenius algebras and modular data",
    author="Your Name",
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    py_modules=["main", "logging_setup"],
    package_data={"library": ["*.json"]},
    python_requires=">=3.8",
    install_requires=[
        "numpy>=1.20",
    ],
    extras_require={
        "test": ["pytest>=7"],
    },
    entry_points={
        "console_scripts": [
            "finite-tqft=main:main",
        ],
    },
    classifiers=[
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "License :: OSI Approved :: MIT License",
        "Operating System :: OS Independent",
    ],
)
