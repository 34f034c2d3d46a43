from setuptools import setup, find_packages

setup(
    name="pwh",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    description="Polyhedral joins, folds and relations among higher Whitehead maps",
    long_description=open("README.md").read(),
    long_description_content_type="text/markdown",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Topic :: Scientific/Engineering :: Mathematics",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Operating System :: OS Independent",
    ],
    keywords="simplicial complex polyhedral product whitehead product topology",
    python_requires=">=3.8",
    install_requires=[
        "more-itertools>=8.0",
        "networkx>=2.5",
    ],
    extras_require={
        "test": ["hypothesis>=6.0"],
    },
    entry_points={
        "console_scripts": ["pwh=pwh.cli:main"],
    },
)
