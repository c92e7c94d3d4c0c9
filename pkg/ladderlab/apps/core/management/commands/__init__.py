# Commands package init
