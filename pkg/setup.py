from setuptools import find_packages, setup

with open("README.md", "r", encoding="UTF-8") as file:
    long_description = file.read()

setup(
    name="invbench",
    version="0.1.0",
    description="多级供应链库存管理基准：仿真环境、基线策略、情景记忆、语言模型智能体与精确最优求解",
    long_description=long_description,
    long_description_content_type="text/markdown",
    author="changxing",
    author_email="1278729001@qq.com",
    install_requires=["numpy", "scipy", "pandas", "pyyaml", "pulp", "openai", "click"],
    extras_require={"test": ["pytest"]},
    license="MIT License",
    packages=find_packages(exclude=["tests"]),
    package_data={
        "invbench.agents": ["templates/*.txt"],
        "invbench.harness": ["data/*.yaml"],
    },
    entry_points={"console_scripts": ["invbench=invbench.cli:main"]},
    python_requires=">=3.10",
    platforms=["all"],
    classifiers=[
        "Intended Audience :: Science/Research",
        "Operating System :: OS Independent",
        "Natural Language :: Chinese (Simplified)",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering"
    ]
)
